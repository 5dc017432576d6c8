// Python bindings for the vertexplace core: graph generation, cover solvers,
// the placement cost model, bandwidth sharing, policy training, and the
// benchmark harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vertexplace/bench.hpp"
#include "vertexplace/gnosis.hpp"
#include "vertexplace/json_io.hpp"
#include "vertexplace/netmodel.hpp"
#include "vertexplace/objective.hpp"
#include "vertexplace/solvers.hpp"
#include "vertexplace/topology.hpp"

namespace py = pybind11;
using namespace vertexplace;

namespace {

TopologySpec spec_from_args(const std::string& family, std::uint32_t n, std::optional<double> p,
                            std::optional<std::uint32_t> k, std::optional<std::uint32_t> m,
                            std::uint64_t seed, bool rewire) {
    TopologySpec spec;
    spec.family = family_from_name(family);
    spec.n = n;
    spec.seed = seed;
    spec.sw_variant = rewire ? SmallWorldVariant::Rewire : SmallWorldVariant::AddShortcuts;
    switch (spec.family) {
        case Family::ErdosRenyi:
            if (!p) throw std::invalid_argument("er requires p");
            spec.p = *p;
            break;
        case Family::SmallWorld:
            if (!k) throw std::invalid_argument("sw requires k");
            spec.k = *k;
            spec.p = p.value_or(0.5);
            break;
        case Family::BarabasiAlbert:
            if (!m) throw std::invalid_argument("ba requires m");
            spec.m = *m;
            break;
    }
    spec.validate();
    return spec;
}

GreedyVariant greedy_variant_from_name(const std::string& name) {
    if (name == "degree") return GreedyVariant::VertexDegree;
    if (name == "edge-pair" || name == "edge_pair") return GreedyVariant::EdgePair;
    throw std::invalid_argument("unknown greedy variant: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Vertex-cover placement toolkit: random graph generators, cover solvers, "
                "a network-aware placement cost model, and an actor-critic policy.";

    mod.attr("DEFAULT_IMAGE_MB") = kDefaultImageMB;
    mod.attr("ETHERNET_MBPS") = kEthernetMBps;
    mod.attr("WIFI_MBPS") = kWifiMBps;

    // ---- topology ----------------------------------------------------------
    py::class_<Edge>(mod, "Edge")
        .def(py::init([](std::uint32_t u, std::uint32_t v, double capacity, double usage) {
                 return Edge{u, v, capacity, usage};
             }),
             py::arg("u"), py::arg("v"), py::arg("capacity_mbps") = kEthernetMBps,
             py::arg("usage_mbps") = 0.0)
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("capacity_mbps", &Edge::capacity_mbps)
        .def_readonly("usage_mbps", &Edge::usage_mbps)
        .def("__eq__", [](const Edge& a, const Edge& b) { return a == b; })
        .def("__repr__", [](const Edge& e) {
            std::ostringstream os;
            os << "Edge(" << e.u << ", " << e.v << ", capacity_mbps=" << e.capacity_mbps
               << ", usage_mbps=" << e.usage_mbps << ")";
            return os.str();
        });

    py::class_<NodeAttrs>(mod, "NodeAttrs")
        .def(py::init([](const std::string& adapter, bool holds_replica, double storage_cost) {
                 return NodeAttrs{adapter_from_name(adapter), holds_replica, storage_cost};
             }),
             py::arg("adapter") = "ethernet", py::arg("holds_replica") = false,
             py::arg("storage_cost") = 1.0)
        .def_property_readonly(
            "adapter", [](const NodeAttrs& a) { return std::string(adapter_name(a.adapter)); })
        .def_readonly("holds_replica", &NodeAttrs::holds_replica)
        .def_readonly("storage_cost", &NodeAttrs::storage_cost);

    py::class_<Topology>(mod, "Topology")
        .def(py::init<std::uint32_t, std::vector<Edge>, std::vector<NodeAttrs>>(), py::arg("n"),
             py::arg("edges"), py::arg("nodes") = std::vector<NodeAttrs>{})
        .def_property_readonly("n", &Topology::n)
        .def_property_readonly("edge_count", &Topology::edge_count)
        .def_property_readonly("edges", [](const Topology& t) { return t.edges(); })
        .def_property_readonly("nodes", [](const Topology& t) { return t.nodes(); })
        .def("degree", &Topology::degree, py::arg("v"))
        .def("max_degree", &Topology::max_degree)
        .def("has_edge", &Topology::has_edge, py::arg("u"), py::arg("v"))
        .def("incident", &Topology::incident, py::arg("v"),
             "List of (neighbor, edge_index) pairs, ascending by neighbor id.")
        .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; })
        .def("__repr__", [](const Topology& t) {
            std::ostringstream os;
            os << "Topology(n=" << t.n() << ", edges=" << t.edge_count() << ")";
            return os.str();
        });

    mod.def("generate", &spec_from_args, py::arg("family"), py::arg("n"),
            py::arg("p") = std::nullopt, py::arg("k") = std::nullopt, py::arg("m") = std::nullopt,
            py::arg("seed") = 0, py::arg("rewire") = false,
            "Build the generation recipe for one random graph; see generate_graph.");
    mod.def(
        "generate_graph",
        [](const std::string& family, std::uint32_t n, std::optional<double> p,
           std::optional<std::uint32_t> k, std::optional<std::uint32_t> m, std::uint64_t seed,
           bool rewire) { return generate(spec_from_args(family, n, p, k, m, seed, rewire)); },
        py::arg("family"), py::arg("n"), py::arg("p") = std::nullopt, py::arg("k") = std::nullopt,
        py::arg("m") = std::nullopt, py::arg("seed") = 0, py::arg("rewire") = false,
        "Generate a random graph: family 'er' (needs p), 'sw' (needs k, optional shortcut "
        "probability p), or 'ba' (needs m). Deterministic in the seed.");
    mod.def("assign_adapters", &assign_adapters, py::arg("t"), py::arg("wifi_ratio"),
            py::arg("seed"),
            "Copy of t with floor(wifi_ratio * n) random vertices moved to WiFi adapters and "
            "link capacities recomputed as the smaller endpoint capacity.");

    mod.def("serialize_topology", &serialize_topology, py::arg("t"));
    mod.def("deserialize_topology", &deserialize_topology, py::arg("text"));

    // ---- covers and cost ---------------------------------------------------
    py::class_<CoverSolution>(mod, "CoverSolution")
        .def(py::init([](std::vector<std::uint32_t> members, std::string producer,
                         std::uint64_t seed) {
                 return CoverSolution{std::move(members), std::move(producer), seed};
             }),
             py::arg("members"), py::arg("producer") = "manual", py::arg("seed") = 0)
        .def_readonly("members", &CoverSolution::members)
        .def_readonly("producer", &CoverSolution::producer)
        .def_readonly("seed", &CoverSolution::seed)
        .def("__len__", [](const CoverSolution& s) { return s.members.size(); })
        .def("__eq__", [](const CoverSolution& a, const CoverSolution& b) { return a == b; })
        .def("__repr__", [](const CoverSolution& s) {
            std::ostringstream os;
            os << "CoverSolution(size=" << s.members.size() << ", producer='" << s.producer
               << "')";
            return os.str();
        });

    mod.def("serialize_cover", &serialize_cover, py::arg("s"));
    mod.def("deserialize_cover", &deserialize_cover, py::arg("text"));
    mod.def("is_valid_cover", &is_valid_cover, py::arg("t"), py::arg("s"));
    mod.def("is_serviceable", &is_serviceable, py::arg("t"), py::arg("s"));
    mod.def("destinations", &destinations, py::arg("t"), py::arg("s"));

    py::class_<DestinationReport>(mod, "DestinationReport")
        .def_readonly("dst", &DestinationReport::dst)
        .def_readonly("provider", &DestinationReport::provider)
        .def_readonly("delay_s", &DestinationReport::delay_s);

    py::class_<CostBreakdown>(mod, "CostBreakdown")
        .def_readonly("replica_count", &CostBreakdown::replica_count)
        .def_readonly("transfer_term", &CostBreakdown::transfer_term)
        .def_readonly("cf", &CostBreakdown::cf)
        .def_readonly("per_destination", &CostBreakdown::per_destination)
        .def_readonly("unreachable", &CostBreakdown::unreachable)
        .def("__repr__", [](const CostBreakdown& b) {
            std::ostringstream os;
            os << "CostBreakdown(replicas=" << b.replica_count << ", cf=" << b.cf << ")";
            return os.str();
        });

    mod.def("cost_function", &cost_function, py::arg("t"), py::arg("s"),
            py::arg("image_size_mb") = kDefaultImageMB,
            "Replica count plus nominal-bandwidth transfer delays, itemized.");
    mod.def("cost_function_shared", &cost_function_shared, py::arg("t"), py::arg("s"),
            py::arg("image_size_mb") = kDefaultImageMB,
            "Like cost_function, but concurrent transfers share links max-min fairly.");
    mod.def("set_cover_cost", &set_cover_cost, py::arg("t"), py::arg("s"),
            py::arg("image_size_mb") = kDefaultImageMB);
    mod.def("brute_force_mvc", &brute_force_mvc, py::arg("t"),
            "Exhaustive minimum vertex cover (n <= 24), lexicographically smallest.");

    // ---- solvers -----------------------------------------------------------
    mod.def("approx_cover", &approx_cover, py::arg("t"), py::arg("seed") = 0,
            "Pick a random uncovered edge and take both endpoints; 2-approximation.");
    mod.def(
        "greedy_cover",
        [](const Topology& t, const std::string& variant, std::uint64_t seed) {
            return greedy_cover(t, greedy_variant_from_name(variant), seed);
        },
        py::arg("t"), py::arg("variant") = "degree", py::arg("seed") = 0,
        "Greedy cover: 'degree' repeatedly takes the highest-degree uncovered vertex, "
        "'edge-pair' takes both endpoints of a random uncovered edge.");

    py::class_<GaConfig>(mod, "GaConfig")
        .def(py::init([](std::uint32_t population, std::uint32_t generations,
                         double mutation_rate) {
                 GaConfig cfg;
                 cfg.population = population;
                 cfg.generations = generations;
                 cfg.mutation_rate = mutation_rate;
                 return cfg;
             }),
             py::arg("population") = GaConfig{}.population,
             py::arg("generations") = GaConfig{}.generations,
             py::arg("mutation_rate") = GaConfig{}.mutation_rate)
        .def_readwrite("population", &GaConfig::population)
        .def_readwrite("generations", &GaConfig::generations)
        .def_readwrite("mutation_rate", &GaConfig::mutation_rate);

    mod.def("genetic_cover", &genetic_cover, py::arg("t"), py::arg("config") = GaConfig{},
            py::arg("image_size_mb") = kDefaultImageMB, py::arg("seed") = 0,
            "Permutation-encoded genetic search scored by the placement cost function.");

    // ---- bandwidth sharing -------------------------------------------------
    mod.def("transfer_time", &transfer_time, py::arg("image_size_mb"), py::arg("bandwidth_mbps"));
    mod.def("feasible_within", &feasible_within, py::arg("image_size_mb"),
            py::arg("bandwidth_mbps"), py::arg("threshold_s"));

    py::class_<Flow>(mod, "Flow")
        .def(py::init([](std::uint32_t src, std::uint32_t dst, std::vector<std::size_t> path) {
                 return Flow{src, dst, std::move(path)};
             }),
             py::arg("src"), py::arg("dst"), py::arg("path"))
        .def_readonly("src", &Flow::src)
        .def_readonly("dst", &Flow::dst)
        .def_readonly("path", &Flow::path);

    py::class_<Allocation>(mod, "Allocation")
        .def_readonly("rates", &Allocation::rates)
        .def_readonly("residuals", &Allocation::residuals);

    mod.def("maxmin_allocate", &maxmin_allocate, py::arg("t"), py::arg("flows"),
            "Max-min fair rates via progressive filling over each flow's edge path.");

    py::class_<TransferReport>(mod, "TransferReport")
        .def_readonly("dst", &TransferReport::dst)
        .def_readonly("provider", &TransferReport::provider)
        .def_readonly("rate_mbps", &TransferReport::rate_mbps)
        .def_readonly("seconds", &TransferReport::seconds);

    mod.def("simulate_distribution", &simulate_distribution, py::arg("t"), py::arg("s"),
            py::arg("image_size_mb") = kDefaultImageMB,
            "Every destination pulls the image at once; link bandwidth is shared max-min "
            "fairly. Ascending by destination id.");

    // ---- policy ------------------------------------------------------------
    py::class_<TrainConfig>(mod, "TrainConfig")
        .def(py::init([](double gamma, double actor_lr, double critic_lr, std::uint32_t episodes,
                         std::uint32_t hidden_dim, std::uint32_t layers, double reward_alpha,
                         std::uint64_t seed, const std::string& advantage, double max_grad_norm) {
                 TrainConfig cfg;
                 cfg.gamma = gamma;
                 cfg.actor_lr = actor_lr;
                 cfg.critic_lr = critic_lr;
                 cfg.episodes = episodes;
                 cfg.hidden_dim = hidden_dim;
                 cfg.layers = layers;
                 cfg.reward_alpha = reward_alpha;
                 cfg.seed = seed;
                 cfg.advantage = advantage_mode_from_name(advantage);
                 cfg.max_grad_norm = max_grad_norm;
                 cfg.validate();
                 return cfg;
             }),
             py::arg("gamma") = TrainConfig{}.gamma, py::arg("actor_lr") = TrainConfig{}.actor_lr,
             py::arg("critic_lr") = TrainConfig{}.critic_lr,
             py::arg("episodes") = TrainConfig{}.episodes,
             py::arg("hidden_dim") = TrainConfig{}.hidden_dim,
             py::arg("layers") = TrainConfig{}.layers,
             py::arg("reward_alpha") = TrainConfig{}.reward_alpha, py::arg("seed") = 0,
             py::arg("advantage") = "boosted",
             py::arg("max_grad_norm") = TrainConfig{}.max_grad_norm)
        .def_readwrite("gamma", &TrainConfig::gamma)
        .def_readwrite("actor_lr", &TrainConfig::actor_lr)
        .def_readwrite("critic_lr", &TrainConfig::critic_lr)
        .def_readwrite("episodes", &TrainConfig::episodes)
        .def_readwrite("hidden_dim", &TrainConfig::hidden_dim)
        .def_readwrite("layers", &TrainConfig::layers)
        .def_readwrite("reward_alpha", &TrainConfig::reward_alpha)
        .def_readwrite("seed", &TrainConfig::seed)
        .def_readwrite("max_grad_norm", &TrainConfig::max_grad_norm)
        .def_property(
            "advantage",
            [](const TrainConfig& c) { return std::string(advantage_mode_name(c.advantage)); },
            [](TrainConfig& c, const std::string& v) { c.advantage = advantage_mode_from_name(v); });

    py::class_<GnosisParams>(mod, "GnosisParams")
        .def_static("init", &GnosisParams::init, py::arg("feature_dim"), py::arg("hidden_dim"),
                    py::arg("layers"), py::arg("seed"))
        .def_readonly("feature_dim", &GnosisParams::feature_dim)
        .def_readonly("hidden_dim", &GnosisParams::hidden_dim)
        .def_property_readonly("layers", &GnosisParams::layer_count)
        .def("__eq__",
             [](const GnosisParams& a, const GnosisParams& b) { return a == b; })
        .def("__repr__", [](const GnosisParams& p) {
            std::ostringstream os;
            os << "GnosisParams(feature_dim=" << p.feature_dim << ", hidden_dim=" << p.hidden_dim
               << ", layers=" << p.layer_count() << ")";
            return os.str();
        });

    py::class_<TrainResult>(mod, "TrainResult")
        .def_readonly("params", &TrainResult::params)
        .def_readonly("episode_returns", &TrainResult::episode_returns)
        .def_readonly("cover_sizes", &TrainResult::cover_sizes)
        .def_readonly("seconds", &TrainResult::seconds);

    mod.def(
        "train",
        [](const std::string& family, std::uint32_t n, std::optional<double> p,
           std::optional<std::uint32_t> k, std::optional<std::uint32_t> m, bool rewire,
           const TrainConfig& cfg) {
            return train(spec_from_args(family, n, p, k, m, 0, rewire), cfg);
        },
        py::arg("family"), py::arg("n"), py::arg("p") = std::nullopt, py::arg("k") = std::nullopt,
        py::arg("m") = std::nullopt, py::arg("rewire") = false, py::arg("config") = TrainConfig{},
        py::call_guard<py::gil_scoped_release>(),
        "Actor-critic training over fresh graphs of one family; deterministic in config.seed.");
    mod.def(
        "train_on", [](const Topology& t, const TrainConfig& cfg) { return train(t, cfg); },
        py::arg("t"), py::arg("config") = TrainConfig{},
        py::call_guard<py::gil_scoped_release>(),
        "Actor-critic training that replays one fixed graph every episode.");
    mod.def("infer_cover", &infer_cover, py::arg("params"), py::arg("t"),
            "Greedy policy rollout: repeatedly add the highest-probability legal vertex.");

    py::class_<GradCheckReport>(mod, "GradCheckReport")
        .def_readonly("max_rel_error_policy", &GradCheckReport::max_rel_error_policy)
        .def_readonly("max_rel_error_value", &GradCheckReport::max_rel_error_value)
        .def_readonly("fd_step", &GradCheckReport::fd_step)
        .def_readonly("tol", &GradCheckReport::tol)
        .def_readonly("passed", &GradCheckReport::passed);

    mod.def("gradient_check", &gradient_check, py::arg("params"), py::arg("t"),
            py::arg("tol") = 1e-4, py::arg("fd_step") = 1e-5,
            "Central finite-difference audit of the hand-written policy and value gradients.");

    mod.def("serialize_model", &serialize_model, py::arg("params"), py::arg("config"));
    mod.def("deserialize_model", &deserialize_model, py::arg("text"),
            "Returns (params, train_config).");

    // ---- benchmarks --------------------------------------------------------
    py::class_<BenchRecord>(mod, "BenchRecord")
        .def_readonly("family", &BenchRecord::family)
        .def_readonly("n", &BenchRecord::n)
        .def_readonly("param", &BenchRecord::param)
        .def_readonly("algorithm", &BenchRecord::algorithm)
        .def_readonly("seed", &BenchRecord::seed)
        .def_readonly("ext_seconds", &BenchRecord::ext_seconds)
        .def_readonly("cf", &BenchRecord::cf)
        .def_readonly("vcs", &BenchRecord::vcs)
        .def_readonly("edges", &BenchRecord::edges)
        .def_readonly("error", &BenchRecord::error)
        .def("ok", &BenchRecord::ok);

    py::class_<ModelTrainInfo>(mod, "ModelTrainInfo")
        .def_readonly("family", &ModelTrainInfo::family)
        .def_readonly("n", &ModelTrainInfo::n)
        .def_readonly("param", &ModelTrainInfo::param)
        .def_readonly("episodes", &ModelTrainInfo::episodes)
        .def_readonly("seconds", &ModelTrainInfo::seconds);

    py::class_<SuiteResult>(mod, "SuiteResult")
        .def_readonly("records", &SuiteResult::records)
        .def_readonly("models", &SuiteResult::models);

    mod.def("default_suite_config", [] { return serialize_suite(SuiteConfig::full_grid()); });
    mod.def(
        "run_suite",
        [](const std::string& config_json, unsigned workers) {
            const SuiteConfig cfg = config_json.empty() ? SuiteConfig::full_grid()
                                                        : deserialize_suite(config_json);
            return run_suite(cfg, workers);
        },
        py::arg("config_json") = std::string(), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "Run the benchmark grid described by a suite config JSON document.");
    mod.def("emit_csv", &emit_csv, py::arg("records"));
    mod.def("parse_csv", &parse_csv, py::arg("text"));
    mod.def("emit_plot", &emit_plot, py::arg("records"), py::arg("metric"),
            "Single-family SVG: one line per algorithm, median metric against network size.");
}
