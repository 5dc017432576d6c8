#include "vertexplace/netmodel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vertexplace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double transfer_time(double image_size_mb, double bandwidth_mbps) {
    if (image_size_mb < 0.0) throw std::invalid_argument("image size must be non-negative");
    if (!(bandwidth_mbps > 0.0)) throw std::runtime_error("no usable link");
    return image_size_mb / bandwidth_mbps;
}

bool feasible_within(double image_size_mb, double bandwidth_mbps, double threshold_s) {
    if (!(threshold_s > 0.0)) throw std::invalid_argument("threshold must be positive");
    if (!(bandwidth_mbps > 0.0)) return false;  // unreachable
    return image_size_mb / bandwidth_mbps < threshold_s;
}

Allocation maxmin_allocate(const Topology& t, const std::vector<Flow>& flows) {
    const std::size_t edge_count = t.edge_count();
    const std::size_t flow_count = flows.size();

    std::vector<std::vector<std::size_t>> flows_on(edge_count);
    for (std::size_t f = 0; f < flow_count; ++f) {
        const Flow& flow = flows[f];
        if (flow.src >= t.n() || flow.dst >= t.n()) throw std::invalid_argument("dangling vertex id");
        if (flow.path.empty()) throw std::invalid_argument("flow has empty path");
        for (std::size_t e : flow.path) {
            if (e >= edge_count) throw std::invalid_argument("flow references nonexistent edge");
            auto& on = flows_on[e];
            if (!on.empty() && on.back() == f) throw std::invalid_argument("duplicate edge in flow path");
            if (std::find(on.begin(), on.end(), f) != on.end()) {
                throw std::invalid_argument("duplicate edge in flow path");
            }
            on.push_back(f);
        }
    }

    std::vector<double> avail(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e) {
        avail[e] = std::max(0.0, t.edges()[e].capacity_mbps - t.edges()[e].usage_mbps);
    }

    Allocation out;
    out.rates.assign(flow_count, 0.0);
    std::vector<std::uint8_t> frozen(flow_count, 0);
    std::size_t active = flow_count;

    // Progressive filling: every pass raises all active rates by the largest
    // uniform increment some edge can still afford, then freezes the flows on
    // edges that just saturated. Each pass freezes at least one flow, so the
    // loop runs at most flow_count times. The active counts are snapshotted
    // per pass so that one edge saturating cannot hide the bandwidth its
    // flows consumed on the other edges they cross in the same pass.
    std::vector<std::size_t> n_active(edge_count);
    while (active > 0) {
        double delta = kInf;
        for (std::size_t e = 0; e < edge_count; ++e) {
            n_active[e] = 0;
            for (std::size_t f : flows_on[e]) n_active[e] += !frozen[f];
            if (n_active[e] > 0) {
                delta = std::min(delta, avail[e] / static_cast<double>(n_active[e]));
            }
        }
        for (std::size_t f = 0; f < flow_count; ++f) {
            if (!frozen[f]) out.rates[f] += delta;
        }
        for (std::size_t e = 0; e < edge_count; ++e) {
            if (n_active[e] > 0) avail[e] -= delta * static_cast<double>(n_active[e]);
        }
        for (std::size_t e = 0; e < edge_count; ++e) {
            if (n_active[e] == 0) continue;
            if (avail[e] <= 1e-12 * (1.0 + t.edges()[e].capacity_mbps)) {
                avail[e] = std::max(avail[e], 0.0);
                for (std::size_t f : flows_on[e]) {
                    if (!frozen[f]) {
                        frozen[f] = 1;
                        --active;
                    }
                }
            }
        }
    }

    out.residuals = std::move(avail);
    return out;
}

std::vector<TransferReport> simulate_distribution(const Topology& t, const CoverSolution& s,
                                                  double image_size_mb) {
    if (!(image_size_mb > 0.0)) throw std::invalid_argument("image size must be positive");
    validate_cover(t, s);
    std::vector<std::uint8_t> in(t.n(), 0);
    for (std::uint32_t v : s.members) in[v] = 1;

    std::vector<TransferReport> reports;
    std::vector<Flow> flows;
    std::vector<std::size_t> flow_of_report;  // index into flows, npos when unreachable

    for (std::uint32_t d : destinations(t, s)) {
        // Same provider rule as the nominal cost: most spare bandwidth wins,
        // lowest id on ties (incident lists are ascending, improvement strict).
        std::int64_t provider = -1;
        std::size_t via_edge = Topology::npos;
        double best_bw = 0.0;
        for (const auto& [nbr, eidx] : t.incident(d)) {
            if (!in[nbr]) continue;
            const Edge& e = t.edges()[eidx];
            const double spare = e.capacity_mbps - e.usage_mbps;
            if (spare > best_bw) {
                best_bw = spare;
                provider = nbr;
                via_edge = eidx;
            }
        }
        TransferReport rep;
        rep.dst = d;
        rep.provider = provider;
        if (provider >= 0) {
            flow_of_report.push_back(flows.size());
            flows.push_back({static_cast<std::uint32_t>(provider), d, {via_edge}});
        } else {
            flow_of_report.push_back(Topology::npos);
            rep.rate_mbps = 0.0;
            rep.seconds = kInf;
        }
        reports.push_back(rep);
    }

    const Allocation alloc = maxmin_allocate(t, flows);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (flow_of_report[i] == Topology::npos) continue;
        const double rate = alloc.rates[flow_of_report[i]];
        reports[i].rate_mbps = rate;
        reports[i].seconds = rate > 0.0 ? image_size_mb / rate : kInf;
    }
    return reports;
}

CostBreakdown cost_function_shared(const Topology& t, const CoverSolution& s,
                                   double image_size_mb) {
    const auto reports = simulate_distribution(t, s, image_size_mb);
    CostBreakdown out;
    out.replica_count = static_cast<std::uint32_t>(s.members.size());
    for (const TransferReport& rep : reports) {
        DestinationReport d;
        d.dst = rep.dst;
        d.provider = rep.provider;
        d.delay_s = rep.seconds;
        if (rep.provider < 0) out.unreachable.push_back(rep.dst);
        out.transfer_term += d.delay_s;
        out.per_destination.push_back(d);
    }
    out.cf = static_cast<double>(out.replica_count) + out.transfer_term;
    return out;
}

}  // namespace vertexplace
