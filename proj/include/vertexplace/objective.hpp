#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vertexplace/topology.hpp"

namespace vertexplace {

constexpr double kDefaultImageMB = 100.0;

// A set of vertices chosen to host replicas. `members` keeps the order in
// which the producing algorithm added vertices; the set view (sorted, unique)
// is what validity and cost care about.
struct CoverSolution {
    std::vector<std::uint32_t> members;
    std::string producer;    // e.g. "approx", "greedy_degree", "genetic", "gnosis"
    std::uint64_t seed = 0;  // seed the producer consumed (0 if none)

    bool operator==(const CoverSolution&) const = default;
};

// Throws std::invalid_argument if members contain out-of-range ids or
// duplicates.
void validate_cover(const Topology& t, const CoverSolution& s);

// True iff every edge has at least one endpoint in s.
bool is_valid_cover(const Topology& t, const CoverSolution& s);

// True iff every vertex outside s has at least one neighbor inside s, i.e.
// every consumer is one hop from a replica. Isolated vertices outside s make
// this false.
bool is_serviceable(const Topology& t, const CoverSolution& s);

// Vertices that must fetch the image over the network: every vertex outside
// s (all vertices are treated as requesters, so an isolated vertex outside s
// is a destination that can never be served). Ascending order.
std::vector<std::uint32_t> destinations(const Topology& t, const CoverSolution& s);

struct DestinationReport {
    std::uint32_t dst = 0;
    // Chosen provider (cover neighbor with the most spare nominal bandwidth,
    // lowest id on ties), or -1 when no cover neighbor has spare bandwidth.
    std::int64_t provider = -1;
    double delay_s = 0.0;  // image_size / spare bandwidth; +inf when unreachable
};

struct CostBreakdown {
    std::uint32_t replica_count = 0;
    double transfer_term = 0.0;  // sum of per-destination delays
    double cf = 0.0;             // replica_count + transfer_term
    std::vector<DestinationReport> per_destination;
    std::vector<std::uint32_t> unreachable;  // destinations with no usable provider
};

// Combined placement cost: the number of replicas plus, for every destination
// vertex, the time to pull one image from its best cover neighbor at nominal
// spare bandwidth (capacity minus background usage, no sharing between
// transfers). Covering every vertex costs exactly |V|. An unreachable
// destination makes cf +inf but is still itemized.
CostBreakdown cost_function(const Topology& t, const CoverSolution& s,
                            double image_size_mb = kDefaultImageMB);

// Pure storage-side cost: image_size * storage_cost summed over s.
double set_cover_cost(const Topology& t, const CoverSolution& s,
                      double image_size_mb = kDefaultImageMB);

// Exhaustive minimum vertex cover. Among all minimum covers returns the
// lexicographically smallest member list. Guarded to n <= 24; larger
// instances throw std::invalid_argument("instance too large for oracle").
CoverSolution brute_force_mvc(const Topology& t);

}  // namespace vertexplace
