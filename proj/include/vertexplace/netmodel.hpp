#pragma once

#include <cstdint>
#include <vector>

#include "vertexplace/objective.hpp"
#include "vertexplace/topology.hpp"

namespace vertexplace {

// Time to move image_size_mb over a dedicated bandwidth.
// Throws std::runtime_error("no usable link") when bandwidth <= 0.
double transfer_time(double image_size_mb, double bandwidth_mbps);

// True iff the transfer finishes strictly inside the threshold. A
// non-positive bandwidth means the destination is unreachable: false, not an
// error.
bool feasible_within(double image_size_mb, double bandwidth_mbps, double threshold_s);

// One concurrent transfer. In this model every transfer runs over the single
// direct link between provider and destination, but the allocator accepts
// arbitrary multi-edge paths.
struct Flow {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::vector<std::size_t> path;  // indices into t.edges()
};

struct Allocation {
    std::vector<double> rates;      // MB/s per flow, same order as the input
    std::vector<double> residuals;  // per edge: spare bandwidth left after allocation
};

// Max-min fair bandwidth split via progressive filling: every rate rises in
// lockstep and a flow freezes the moment any edge on its path runs out of
// spare bandwidth (capacity minus background usage). No flow can be raised
// afterwards without lowering a flow of equal or smaller rate.
// Throws std::invalid_argument on flows referencing nonexistent edges, empty
// or self-crossing paths, or out-of-range endpoints.
Allocation maxmin_allocate(const Topology& t, const std::vector<Flow>& flows);

// Outcome of one destination's image pull when all destinations transfer at
// once.
struct TransferReport {
    std::uint32_t dst = 0;
    std::int64_t provider = -1;   // -1 when no cover neighbor has spare bandwidth
    double rate_mbps = 0.0;       // max-min allocated rate
    double seconds = 0.0;         // image_size / rate; +inf when unreachable
};

// Simulates every destination pulling the image simultaneously from its best
// cover neighbor (most spare bandwidth, lowest id on ties), with link
// bandwidth shared max-min fairly. Unreachable destinations are reported with
// +inf, never thrown. Results are ascending by destination id.
std::vector<TransferReport> simulate_distribution(const Topology& t, const CoverSolution& s,
                                                  double image_size_mb = kDefaultImageMB);

// Cost identical in shape to cost_function but with delays taken from
// simulate_distribution, i.e. transfers contend for bandwidth instead of each
// enjoying the full nominal spare capacity.
CostBreakdown cost_function_shared(const Topology& t, const CoverSolution& s,
                                   double image_size_mb = kDefaultImageMB);

}  // namespace vertexplace
