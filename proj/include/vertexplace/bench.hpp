#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vertexplace/gnosis.hpp"
#include "vertexplace/solvers.hpp"
#include "vertexplace/topology.hpp"

namespace vertexplace {

// One measured (topology, algorithm, seed) cell.
struct BenchRecord {
    std::string family;     // "er" | "sw" | "ba"
    std::uint32_t n = 0;
    double param = 0.0;     // the family's varying parameter (p, k, or m)
    std::string algorithm;  // "approx" | "greedy" | "genetic" | "gnosis"
    std::uint64_t seed = 0;
    double ext_seconds = 0.0;  // wall clock around the solver call only
    double cf = 0.0;
    std::uint64_t vcs = 0;
    std::uint64_t edges = 0;
    std::string error;  // non-empty marks a failed cell

    bool ok() const { return error.empty(); }
};

struct FamilyPlan {
    Family family = Family::ErdosRenyi;
    std::vector<double> params;  // p values, lattice k values, or attachment m values
    double shortcut_p = 0.5;     // small-world only
};

struct SuiteConfig {
    std::vector<FamilyPlan> families;
    std::vector<std::uint32_t> sizes;
    std::vector<std::string> algorithms;
    std::uint32_t repetitions = 10;
    std::uint64_t base_seed = 1;
    double image_size_mb = kDefaultImageMB;
    double wifi_ratio = 0.75;
    GaConfig genetic;
    // Training budget for the one model trained per (family, size); sized for
    // a desk-scale run by default.
    TrainConfig gnosis{.episodes = 300, .hidden_dim = 16, .layers = 2};

    // The full experiment grid: er p in {0.2,0.5,0.7}, sw k in {2,4,7} at
    // shortcut probability 0.5, ba m in {1,3,8}; sizes {64,128,256,512}; all
    // four algorithms; 10 repetitions.
    static SuiteConfig full_grid();

    void validate() const;
};

std::string serialize_suite(const SuiteConfig& cfg);
SuiteConfig deserialize_suite(const std::string& text);

struct RunContext {
    double wifi_ratio = 0.75;
    GaConfig genetic;
    const GnosisParams* model = nullptr;  // required by the gnosis algorithm
};

// Generates the topology from spec, applies the WiFi share, runs one solver,
// and evaluates the cover. Only the solver call is timed. Solver errors are
// rethrown with the cell coordinates prepended.
BenchRecord run_cell(const TopologySpec& spec, const std::string& algorithm,
                     double image_size_mb, std::uint64_t solver_seed, const RunContext& ctx = {});

struct ModelTrainInfo {
    std::string family;
    std::uint32_t n = 0;
    double param = 0.0;  // parameter variant the model was trained on
    std::uint32_t episodes = 0;
    double seconds = 0.0;
};

struct SuiteResult {
    std::vector<BenchRecord> records;     // sorted by family, n, param, algorithm, seed
    std::vector<ModelTrainInfo> models;   // training time is reported here, never in ext
};

// One record per (family, size, param, algorithm, repetition). Failed cells
// carry error text instead of aborting the suite. Cell seeds derive from
// base_seed and the cell coordinates, so results do not depend on execution
// order or worker count.
SuiteResult run_suite(const SuiteConfig& cfg, unsigned workers = 1);

// Columns: family,n,param,algorithm,seed,ext_s,cf,vcs,edges. Numeric fields
// use shortest round-trip formatting. Failed records are omitted.
std::string emit_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(const std::string& text);

// Line plot of one metric ("ext" | "cf" | "vcs") for records of a single
// family: network size on the x axis, one series per algorithm, median over
// the records in each (algorithm, size) bucket. "ext" uses a log y axis.
// Throws std::invalid_argument on empty input or mixed families.
std::string emit_plot(const std::vector<BenchRecord>& records, const std::string& metric);

}  // namespace vertexplace
