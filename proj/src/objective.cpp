#include "vertexplace/objective.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vertexplace {

namespace {

std::vector<std::uint8_t> membership(const Topology& t, const CoverSolution& s) {
    std::vector<std::uint8_t> in(t.n(), 0);
    for (std::uint32_t v : s.members) {
        if (v >= t.n()) throw std::invalid_argument("dangling vertex id");
        if (in[v]) throw std::invalid_argument("duplicate cover member");
        in[v] = 1;
    }
    return in;
}

}  // namespace

void validate_cover(const Topology& t, const CoverSolution& s) { membership(t, s); }

bool is_valid_cover(const Topology& t, const CoverSolution& s) {
    const auto in = membership(t, s);
    for (const Edge& e : t.edges()) {
        if (!in[e.u] && !in[e.v]) return false;
    }
    return true;
}

bool is_serviceable(const Topology& t, const CoverSolution& s) {
    const auto in = membership(t, s);
    for (std::uint32_t v = 0; v < t.n(); ++v) {
        if (in[v]) continue;
        bool near = false;
        for (const auto& [nbr, eidx] : t.incident(v)) {
            (void)eidx;
            if (in[nbr]) {
                near = true;
                break;
            }
        }
        if (!near) return false;
    }
    return true;
}

std::vector<std::uint32_t> destinations(const Topology& t, const CoverSolution& s) {
    const auto in = membership(t, s);
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < t.n(); ++v) {
        if (!in[v]) out.push_back(v);
    }
    return out;
}

CostBreakdown cost_function(const Topology& t, const CoverSolution& s, double image_size_mb) {
    if (!(image_size_mb > 0.0)) throw std::invalid_argument("image size must be positive");
    const auto in = membership(t, s);
    constexpr double inf = std::numeric_limits<double>::infinity();

    CostBreakdown out;
    out.replica_count = static_cast<std::uint32_t>(s.members.size());
    for (std::uint32_t d = 0; d < t.n(); ++d) {
        if (in[d]) continue;
        // Best provider: the cover neighbor with the most spare bandwidth
        // (capacity minus background usage); lowest id wins ties because the
        // incident list is ascending and we require a strict improvement.
        std::int64_t provider = -1;
        double best_bw = 0.0;
        for (const auto& [nbr, eidx] : t.incident(d)) {
            if (!in[nbr]) continue;
            const Edge& e = t.edges()[eidx];
            const double spare = e.capacity_mbps - e.usage_mbps;
            if (spare > best_bw) {
                best_bw = spare;
                provider = nbr;
            }
        }
        DestinationReport rep;
        rep.dst = d;
        rep.provider = provider;
        rep.delay_s = provider < 0 ? inf : image_size_mb / best_bw;
        if (provider < 0) out.unreachable.push_back(d);
        out.transfer_term += rep.delay_s;
        out.per_destination.push_back(rep);
    }
    out.cf = static_cast<double>(out.replica_count) + out.transfer_term;
    return out;
}

double set_cover_cost(const Topology& t, const CoverSolution& s, double image_size_mb) {
    if (!(image_size_mb > 0.0)) throw std::invalid_argument("image size must be positive");
    validate_cover(t, s);
    double total = 0.0;
    for (std::uint32_t v : s.members) total += image_size_mb * t.node(v).storage_cost;
    return total;
}

namespace {

// Among equal-popcount masks, the one holding the lowest differing bit comes
// first when both are written as ascending vertex lists.
bool lex_smaller(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    const std::uint32_t low = diff & (0u - diff);
    return (a & low) != 0;
}

}  // namespace

CoverSolution brute_force_mvc(const Topology& t) {
    const std::uint32_t n = t.n();
    if (n > 24) throw std::invalid_argument("instance too large for oracle");

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(t.edge_count());
    for (const Edge& e : t.edges()) {
        edge_masks.push_back((1u << e.u) | (1u << e.v));
    }
    const auto covers = [&](std::uint32_t mask) {
        for (std::uint32_t em : edge_masks) {
            if (!(mask & em)) return false;
        }
        return true;
    };

    std::uint32_t best = 0;
    bool found = false;
    if (covers(0)) {
        found = true;  // edgeless graph: the empty set is minimum
    }
    // Enumerate masks level by level (popcount 1, 2, ...) so the first level
    // containing a cover is the optimum; within that level keep the
    // lexicographically smallest member list.
    for (std::uint32_t k = 1; k <= n && !found; ++k) {
        const std::uint64_t limit = 1ull << n;
        std::uint64_t mask = (1ull << k) - 1;
        while (mask < limit) {
            const auto m32 = static_cast<std::uint32_t>(mask);
            if (covers(m32) && (!found || lex_smaller(m32, best))) {
                best = m32;
                found = true;
            }
            const std::uint64_t u = mask & (0ull - mask);
            const std::uint64_t up = mask + u;
            mask = up | (((mask ^ up) >> 2) / u);
        }
    }

    CoverSolution out;
    out.producer = "brute_force";
    for (std::uint32_t v = 0; v < n; ++v) {
        if (best & (1u << v)) out.members.push_back(v);
    }
    return out;
}

}  // namespace vertexplace
