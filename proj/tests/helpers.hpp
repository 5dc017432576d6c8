#pragma once
// Shared fixtures and independent reference implementations ("oracles") for
// the test suites. Each oracle recomputes its quantity with a different
// algorithm or data layout than the production code, so agreement between
// the two is meaningful evidence rather than a tautology.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertexplace/netmodel.hpp"
#include "vertexplace/objective.hpp"
#include "vertexplace/topology.hpp"

namespace testutil {

using vertexplace::CoverSolution;
using vertexplace::Edge;
using vertexplace::Flow;
using vertexplace::Topology;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------- builders

inline Topology path_graph(std::uint32_t n, double capacity = 100.0) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, capacity, 0.0});
    return Topology(n, std::move(edges));
}

// Center 0 plus `leaves` leaves.
inline Topology star_graph(std::uint32_t leaves, double capacity = 100.0) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 1; i <= leaves; ++i) edges.push_back({0, i, capacity, 0.0});
    return Topology(leaves + 1, std::move(edges));
}

inline Topology cycle_graph(std::uint32_t n, double capacity = 100.0) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, capacity, 0.0});
    return Topology(n, std::move(edges));
}

inline Topology complete_graph(std::uint32_t n, double capacity = 100.0) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, capacity, 0.0});
    return Topology(n, std::move(edges));
}

inline CoverSolution cover(std::vector<std::uint32_t> members) {
    CoverSolution s;
    s.members = std::move(members);
    s.producer = "test";
    return s;
}

inline std::vector<std::uint32_t> sorted_members(const CoverSolution& s) {
    std::vector<std::uint32_t> m = s.members;
    std::sort(m.begin(), m.end());
    return m;
}

// ---------------------------------------------------------------- graph facts

inline bool is_connected(const Topology& t) {
    if (t.n() == 0) return true;
    std::vector<char> seen(t.n(), 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (const auto& [nbr, eidx] : t.incident(u)) {
            if (!seen[nbr]) {
                seen[nbr] = 1;
                ++visited;
                stack.push_back(nbr);
            }
        }
    }
    return visited == t.n();
}

// First connected draw at or above `seed` (bumps the seed until connected).
inline Topology random_connected_er(std::uint32_t n, double p, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Topology t = vertexplace::generate_erdos_renyi(n, p, s);
        if (is_connected(t)) return t;
    }
}

// ---------------------------------------------------------------- cost oracle

// Placement cost recomputed with a plain double loop over destination x
// candidate-provider vertex pairs. Accumulation order (delays summed over
// ascending destinations, replica count added last) deliberately matches the
// production definition so the comparison can demand exact equality.
inline double naive_cost(const Topology& t, const std::vector<std::uint32_t>& members,
                         double image_mb) {
    std::vector<char> in(t.n(), 0);
    for (const std::uint32_t v : members) in.at(v) = 1;
    double term = 0.0;
    for (std::uint32_t d = 0; d < t.n(); ++d) {
        if (in[d]) continue;
        double best = 0.0;
        bool reachable = false;
        for (std::uint32_t c = 0; c < t.n(); ++c) {
            if (!in[c] || c == d) continue;
            const std::size_t e = t.find_edge(c, d);
            if (e == Topology::npos) continue;
            const double spare = t.edges()[e].capacity_mbps - t.edges()[e].usage_mbps;
            if (spare > best) {
                best = spare;
                reachable = true;
            }
        }
        term += reachable ? image_mb / best : kInf;
    }
    return static_cast<double>(members.size()) + term;
}

// ---------------------------------------------------------------- MVC oracles

// Exact minimum-cover size by branching on the endpoints of an uncovered
// edge (classic search-tree bound; independent of the bitmask enumeration in
// the production oracle).
inline std::size_t exact_mvc_size(const Topology& t) {
    if (t.n() > 64) throw std::invalid_argument("oracle limited to 64 vertices");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    es.reserve(t.edge_count());
    for (const Edge& e : t.edges()) es.emplace_back(e.u, e.v);
    const auto rec = [&es](auto&& self, std::uint64_t chosen, std::size_t used,
                           std::size_t best) -> std::size_t {
        if (used >= best) return best;
        for (const auto& [u, v] : es) {
            if (((chosen >> u) & 1) || ((chosen >> v) & 1)) continue;
            best = self(self, chosen | (1ull << u), used + 1, best);
            best = self(self, chosen | (1ull << v), used + 1, best);
            return best;
        }
        return used;  // every edge covered
    };
    return rec(rec, 0, 0, t.n());
}

// Minimum cover with the lexicographically smallest member list, found by
// enumerating every vertex subset in plain counting order. Exponential; keep
// n small.
inline std::vector<std::uint32_t> enumerate_min_cover(const Topology& t) {
    if (t.n() > 20) throw std::invalid_argument("oracle limited to 20 vertices");
    std::vector<std::uint32_t> best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ull << t.n()); ++mask) {
        bool valid = true;
        for (const Edge& e : t.edges()) {
            if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        std::vector<std::uint32_t> members;
        for (std::uint32_t v = 0; v < t.n(); ++v) {
            if ((mask >> v) & 1) members.push_back(v);
        }
        if (!have || members.size() < best.size() ||
            (members.size() == best.size() && members < best)) {
            best = std::move(members);
            have = true;
        }
    }
    return best;
}

// ------------------------------------------------------------ fairness oracle

// Bottleneck-first water filling: each round computes, per edge, the equal
// share its remaining bandwidth offers the still-unfrozen flows crossing it,
// then freezes every unfrozen flow on the tightest edge at that share. The
// production allocator instead raises all rates in lockstep; the two agree
// on the max-min allocation but share no code or program structure.
inline std::vector<double> waterfill(const Topology& t, const std::vector<Flow>& flows) {
    const std::size_t nf = flows.size();
    std::vector<double> rate(nf, 0.0);
    std::vector<char> frozen(nf, 0);
    std::vector<double> avail(t.edge_count());
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        avail[e] = std::max(0.0, t.edges()[e].capacity_mbps - t.edges()[e].usage_mbps);
    }
    std::vector<std::vector<std::size_t>> crossing(t.edge_count());
    for (std::size_t f = 0; f < nf; ++f) {
        for (const std::size_t e : flows[f].path) crossing.at(e).push_back(f);
    }
    for (;;) {
        double best_share = kInf;
        std::size_t best_edge = Topology::npos;
        for (std::size_t e = 0; e < t.edge_count(); ++e) {
            std::size_t active = 0;
            double taken = 0.0;
            for (const std::size_t f : crossing[e]) {
                if (frozen[f]) {
                    taken += rate[f];
                } else {
                    ++active;
                }
            }
            if (active == 0) continue;
            const double share = (avail[e] - taken) / static_cast<double>(active);
            if (share < best_share) {
                best_share = share;
                best_edge = e;
            }
        }
        if (best_edge == Topology::npos) break;
        best_share = std::max(best_share, 0.0);
        for (const std::size_t f : crossing[best_edge]) {
            if (!frozen[f]) {
                rate[f] = best_share;
                frozen[f] = 1;
            }
        }
    }
    return rate;
}

// Per-edge feasibility: crossing rates never exceed the edge's available
// bandwidth (capacity minus background usage) beyond tolerance.
inline bool allocation_feasible(const Topology& t, const std::vector<Flow>& flows,
                                const std::vector<double>& rates, double tol = 1e-9) {
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        const double avail =
            std::max(0.0, t.edges()[e].capacity_mbps - t.edges()[e].usage_mbps);
        double sum = 0.0;
        for (std::size_t f = 0; f < flows.size(); ++f) {
            for (const std::size_t pe : flows[f].path) {
                if (pe == e) sum += rates[f];
            }
        }
        if (sum > avail + tol) return false;
    }
    return true;
}

// Bottleneck condition: every flow crosses at least one edge that is
// saturated and on which no crossing flow runs faster than it. This is the
// checkable form of "no flow can be raised without lowering a flow of equal
// or smaller rate".
inline bool allocation_maxmin_fair(const Topology& t, const std::vector<Flow>& flows,
                                   const std::vector<double>& rates, double tol = 1e-9) {
    for (std::size_t f = 0; f < flows.size(); ++f) {
        bool has_bottleneck = false;
        for (const std::size_t e : flows[f].path) {
            const double avail =
                std::max(0.0, t.edges()[e].capacity_mbps - t.edges()[e].usage_mbps);
            double sum = 0.0;
            bool dominated = false;
            for (std::size_t g = 0; g < flows.size(); ++g) {
                for (const std::size_t pe : flows[g].path) {
                    if (pe != e) continue;
                    sum += rates[g];
                    if (rates[g] > rates[f] + tol) dominated = true;
                }
            }
            if (!dominated && sum >= avail - tol) {
                has_bottleneck = true;
                break;
            }
        }
        if (!has_bottleneck) return false;
    }
    return true;
}

}  // namespace testutil
