#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace vertexplace {

// Network adapter installed at a node. The adapter bounds the bandwidth of
// every link touching the node.
enum class Adapter { Ethernet, WiFi };

constexpr double kEthernetMBps = 100.0;  // MB/s
constexpr double kWifiMBps = 25.0;       // MB/s

double adapter_capacity(Adapter a);
const char* adapter_name(Adapter a);
Adapter adapter_from_name(const std::string& name);

struct NodeAttrs {
    Adapter adapter = Adapter::Ethernet;
    bool holds_replica = false;
    double storage_cost = 1.0;  // cost per MB stored at this node

    bool operator==(const NodeAttrs&) const = default;
};

// Undirected link. Stored once with u < v.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double capacity_mbps = kEthernetMBps;  // total link bandwidth, MB/s
    double usage_mbps = 0.0;               // background traffic already on the link

    bool operator==(const Edge&) const = default;
};

// Immutable undirected network graph. Vertex ids are exactly 0..n-1. Edges
// are canonicalized (u < v, sorted lexicographically) at construction, which
// makes equality and serialization stable regardless of insertion order.
class Topology {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Topology() = default;
    // Validates and canonicalizes. Throws std::invalid_argument on vertex ids
    // outside [0,n), self loops, duplicate edges, non-positive capacity, or
    // usage outside [0, capacity].
    Topology(std::uint32_t n, std::vector<Edge> edges, std::vector<NodeAttrs> nodes = {});

    std::uint32_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<NodeAttrs>& nodes() const { return nodes_; }
    const NodeAttrs& node(std::uint32_t v) const { return nodes_.at(v); }

    std::size_t degree(std::uint32_t v) const { return adj_.at(v).size(); }
    std::size_t max_degree() const;

    // (neighbor id, index into edges()) pairs, ascending by neighbor id.
    const std::vector<std::pair<std::uint32_t, std::size_t>>& incident(std::uint32_t v) const {
        return adj_.at(v);
    }

    // Index into edges() of the link between u and v (either order), or npos.
    std::size_t find_edge(std::uint32_t u, std::uint32_t v) const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const { return find_edge(u, v) != npos; }

    bool operator==(const Topology& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && nodes_ == other.nodes_;
    }

private:
    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<NodeAttrs> nodes_;
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj_;
};

enum class Family { ErdosRenyi, SmallWorld, BarabasiAlbert };

const char* family_name(Family f);             // "er" | "sw" | "ba"
Family family_from_name(const std::string&);   // accepts the same short names

// For the small-world family: AddShortcuts keeps the ring lattice intact and
// adds extra random links alongside it; Rewire detaches lattice links and
// reattaches them to random endpoints instead.
enum class SmallWorldVariant { AddShortcuts, Rewire };

// Declarative recipe for one random graph.
struct TopologySpec {
    Family family = Family::ErdosRenyi;
    std::uint32_t n = 0;
    double p = 0.0;       // ER link probability / small-world shortcut probability
    std::uint32_t k = 0;  // small-world: lattice neighbors per node
    std::uint32_t m = 0;  // Barabasi-Albert: links added per new node
    std::uint64_t seed = 0;
    SmallWorldVariant sw_variant = SmallWorldVariant::AddShortcuts;

    // The parameter that varies within the family (p, k, or m as a double).
    double family_param() const;
    void validate() const;  // throws std::invalid_argument
};

// Every generator is deterministic in (arguments, seed). All nodes start with
// Ethernet adapters and every link at Ethernet capacity with zero usage; use
// assign_adapters to introduce a WiFi share.
Topology generate_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);
Topology generate_small_world(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed,
                              SmallWorldVariant variant = SmallWorldVariant::AddShortcuts);
Topology generate_barabasi_albert(std::uint32_t n, std::uint32_t m, std::uint64_t seed);
Topology generate(const TopologySpec& spec);

// Returns a copy with exactly floor(wifi_ratio * n) nodes switched to WiFi
// (chosen uniformly by seed) and every link capacity recomputed as the
// smaller of its endpoints' adapter capacities. Link usage is clamped to the
// new capacity.
Topology assign_adapters(const Topology& t, double wifi_ratio, std::uint64_t seed);

}  // namespace vertexplace
