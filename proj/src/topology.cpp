#include "vertexplace/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "vertexplace/rng.hpp"

namespace vertexplace {

double adapter_capacity(Adapter a) {
    return a == Adapter::Ethernet ? kEthernetMBps : kWifiMBps;
}

const char* adapter_name(Adapter a) {
    return a == Adapter::Ethernet ? "ethernet" : "wifi";
}

Adapter adapter_from_name(const std::string& name) {
    if (name == "ethernet") return Adapter::Ethernet;
    if (name == "wifi") return Adapter::WiFi;
    throw std::invalid_argument("unknown adapter: " + name);
}

Topology::Topology(std::uint32_t n, std::vector<Edge> edges, std::vector<NodeAttrs> nodes)
    : n_(n), edges_(std::move(edges)), nodes_(std::move(nodes)) {
    if (nodes_.empty()) {
        nodes_.resize(n_);
    } else if (nodes_.size() != n_) {
        throw std::invalid_argument("node attribute list size does not match vertex count");
    }
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("dangling vertex id");
        if (e.u == e.v) throw std::invalid_argument("self loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!(e.capacity_mbps > 0.0)) throw std::invalid_argument("non-positive link capacity");
        if (e.usage_mbps < 0.0 || e.usage_mbps > e.capacity_mbps) {
            throw std::invalid_argument("link usage outside [0, capacity]");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw std::invalid_argument("duplicate edge");
        }
    }
    adj_.assign(n_, {});
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        adj_[edges_[idx].u].emplace_back(edges_[idx].v, idx);
        adj_[edges_[idx].v].emplace_back(edges_[idx].u, idx);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

std::size_t Topology::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, nbrs.size());
    return best;
}

std::size_t Topology::find_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_) return npos;
    const auto& nbrs = adj_[u];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const auto& pr, std::uint32_t val) { return pr.first < val; });
    if (it != nbrs.end() && it->first == v) return it->second;
    return npos;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::ErdosRenyi: return "er";
        case Family::SmallWorld: return "sw";
        case Family::BarabasiAlbert: return "ba";
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& s) {
    if (s == "er") return Family::ErdosRenyi;
    if (s == "sw") return Family::SmallWorld;
    if (s == "ba") return Family::BarabasiAlbert;
    throw std::invalid_argument("unknown family: " + s);
}

double TopologySpec::family_param() const {
    switch (family) {
        case Family::ErdosRenyi: return p;
        case Family::SmallWorld: return static_cast<double>(k);
        case Family::BarabasiAlbert: return static_cast<double>(m);
    }
    throw std::invalid_argument("unknown family");
}

void TopologySpec::validate() const {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    switch (family) {
        case Family::ErdosRenyi:
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("link probability out of range");
            break;
        case Family::SmallWorld:
            if (k < 1 || 2ull * k >= n) throw std::invalid_argument("lattice parameter out of range");
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("shortcut probability out of range");
            break;
        case Family::BarabasiAlbert:
            if (m < 1 || m >= n) throw std::invalid_argument("attachment count out of range");
            break;
    }
}

Topology generate_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("link probability out of range");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u + 1 < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (rng.uniform() < p) edges.push_back({u, v});
        }
    }
    return Topology(n, std::move(edges));
}

namespace {

// Mutable adjacency used while a generator is still adding links.
struct EdgeSetBuilder {
    explicit EdgeSetBuilder(std::uint32_t n) : adj(n) {}

    bool has(std::uint32_t u, std::uint32_t v) const { return adj[u].count(v) > 0; }
    std::size_t degree(std::uint32_t u) const { return adj[u].size(); }

    void add(std::uint32_t u, std::uint32_t v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    void remove(std::uint32_t u, std::uint32_t v) {
        adj[u].erase(v);
        adj[v].erase(u);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::uint32_t u = 0; u < adj.size(); ++u) {
            for (std::uint32_t v : adj[u]) {
                if (u < v) out.push_back({u, v});
            }
        }
        return out;
    }

    std::vector<std::set<std::uint32_t>> adj;
};

}  // namespace

Topology generate_small_world(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed,
                              SmallWorldVariant variant) {
    if (k < 1 || 2ull * k >= n) throw std::invalid_argument("lattice parameter out of range");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("shortcut probability out of range");
    Rng rng(seed);
    const std::uint32_t half = k / 2;

    EdgeSetBuilder g(n);
    for (std::uint32_t j = 1; j <= half; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) {
            g.add(i, (i + j) % n);
        }
    }

    // Walk the lattice links in creation order; each one independently gets a
    // chance to spawn (AddShortcuts) or become (Rewire) a random link.
    for (std::uint32_t j = 1; j <= half; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t u = i;
            const std::uint32_t v = (i + j) % n;
            if (rng.uniform() >= p) continue;
            std::uint32_t w = static_cast<std::uint32_t>(rng.below(n));
            bool found = true;
            while (w == u || g.has(u, w)) {
                if (g.degree(u) >= n - 1) {
                    found = false;  // u already linked to everyone
                    break;
                }
                w = static_cast<std::uint32_t>(rng.below(n));
            }
            if (!found) continue;
            if (variant == SmallWorldVariant::Rewire) g.remove(u, v);
            g.add(u, w);
        }
    }
    return Topology(n, g.edges());
}

Topology generate_barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw std::invalid_argument("attachment count out of range");
    Rng rng(seed);

    std::vector<Edge> edges;
    // Each endpoint of every existing link appears once per incident link, so
    // drawing uniformly from this pool realizes preferential attachment.
    std::vector<std::uint32_t> pool;
    std::vector<std::uint32_t> targets(m);
    for (std::uint32_t i = 0; i < m; ++i) targets[i] = i;

    for (std::uint32_t v = m; v < n; ++v) {
        for (std::uint32_t t : targets) edges.push_back({t, v});
        for (std::uint32_t t : targets) pool.push_back(t);
        pool.insert(pool.end(), m, v);
        if (v + 1 < n) {
            targets.clear();
            while (targets.size() < m) {
                const std::uint32_t x = pool[rng.below(pool.size())];
                if (std::find(targets.begin(), targets.end(), x) == targets.end()) {
                    targets.push_back(x);
                }
            }
        }
    }
    return Topology(n, std::move(edges));
}

Topology generate(const TopologySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::ErdosRenyi:
            return generate_erdos_renyi(spec.n, spec.p, spec.seed);
        case Family::SmallWorld:
            return generate_small_world(spec.n, spec.k, spec.p, spec.seed, spec.sw_variant);
        case Family::BarabasiAlbert:
            return generate_barabasi_albert(spec.n, spec.m, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

Topology assign_adapters(const Topology& t, double wifi_ratio, std::uint64_t seed) {
    if (!(wifi_ratio >= 0.0 && wifi_ratio <= 1.0)) {
        throw std::invalid_argument("wifi ratio out of range");
    }
    const std::uint32_t n = t.n();
    // Small epsilon guards against 0.29*100 -> 28.999... style rounding.
    const auto wifi_count =
        static_cast<std::uint32_t>(std::floor(wifi_ratio * static_cast<double>(n) + 1e-9));

    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    std::vector<NodeAttrs> nodes = t.nodes();
    for (std::uint32_t i = 0; i < n; ++i) {
        nodes[order[i]].adapter = i < wifi_count ? Adapter::WiFi : Adapter::Ethernet;
    }

    std::vector<Edge> edges = t.edges();
    for (auto& e : edges) {
        e.capacity_mbps = std::min(adapter_capacity(nodes[e.u].adapter),
                                   adapter_capacity(nodes[e.v].adapter));
        e.usage_mbps = std::min(e.usage_mbps, e.capacity_mbps);
    }
    return Topology(n, std::move(edges), std::move(nodes));
}

}  // namespace vertexplace
