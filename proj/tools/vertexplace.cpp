// Command-line front end: graph generation, cover solving, cost evaluation,
// policy training, and the benchmark suite.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "vertexplace/bench.hpp"
#include "vertexplace/gnosis.hpp"
#include "vertexplace/json_io.hpp"
#include "vertexplace/netmodel.hpp"
#include "vertexplace/objective.hpp"
#include "vertexplace/rng.hpp"
#include "vertexplace/solvers.hpp"
#include "vertexplace/topology.hpp"

namespace {

using namespace vertexplace;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
}

struct FamilyArgs {
    std::string family = "er";
    std::uint32_t n = 64;
    double p = -1.0;  // er probability or sw shortcut probability
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    std::uint64_t seed = 0;
    bool sw_rewire = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--family", family, "Graph family: er, sw, or ba")
            ->check(CLI::IsMember({"er", "sw", "ba"}));
        cmd->add_option("--n", n, "Vertex count")->required();
        cmd->add_option("--p", p, "er: link probability; sw: shortcut probability (default 0.5)");
        cmd->add_option("--k", k, "sw: ring-lattice neighbors per vertex");
        cmd->add_option("--m", m, "ba: links added per new vertex");
        cmd->add_option("--seed", seed, "Generator seed");
        cmd->add_flag("--sw-rewire", sw_rewire,
                      "sw: rewire lattice links instead of adding shortcuts");
    }

    TopologySpec to_spec() const {
        TopologySpec ts;
        ts.family = family_from_name(family);
        ts.n = n;
        ts.seed = seed;
        ts.sw_variant = sw_rewire ? SmallWorldVariant::Rewire : SmallWorldVariant::AddShortcuts;
        switch (ts.family) {
            case Family::ErdosRenyi:
                if (p < 0.0) throw std::runtime_error("er requires --p");
                ts.p = p;
                break;
            case Family::SmallWorld:
                if (k == 0) throw std::runtime_error("sw requires --k");
                ts.k = k;
                ts.p = p < 0.0 ? 0.5 : p;
                break;
            case Family::BarabasiAlbert:
                if (m == 0) throw std::runtime_error("ba requires --m");
                ts.m = m;
                break;
        }
        ts.validate();
        return ts;
    }
};

int cmd_generate(const FamilyArgs& fa, double wifi_ratio, std::uint64_t adapter_seed_offset,
                 const std::string& out) {
    const TopologySpec spec = fa.to_spec();
    Topology t = generate(spec);
    if (wifi_ratio > 0.0) {
        t = assign_adapters(t, wifi_ratio, Rng::mix(spec.seed, adapter_seed_offset));
    }
    write_output(out, serialize_topology(t));
    return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& algo,
              const std::string& greedy_variant, std::uint64_t seed, double image_mb,
              const std::string& model_path, const GaConfig& ga, const std::string& out) {
    const Topology t = deserialize_topology(read_file(graph_path));
    CoverSolution cover;
    if (algo == "approx") {
        cover = approx_cover(t, seed);
    } else if (algo == "greedy") {
        const GreedyVariant variant = greedy_variant == "edge-pair" ? GreedyVariant::EdgePair
                                                                    : GreedyVariant::VertexDegree;
        cover = greedy_cover(t, variant, seed);
    } else if (algo == "genetic") {
        cover = genetic_cover(t, ga, image_mb, seed);
    } else if (algo == "gnosis") {
        if (model_path.empty()) throw std::runtime_error("gnosis requires --model");
        const auto [params, cfg] = deserialize_model(read_file(model_path));
        (void)cfg;
        cover = infer_cover(params, t);
    } else if (algo == "brute-force") {
        cover = brute_force_mvc(t);
    } else {
        throw std::runtime_error("unknown algorithm: " + algo);
    }
    write_output(out, serialize_cover(cover));
    return 0;
}

int cmd_eval(const std::string& graph_path, const std::string& cover_path, double image_mb,
             bool shared, const std::string& out) {
    const Topology t = deserialize_topology(read_file(graph_path));
    const CoverSolution cover = deserialize_cover(read_file(cover_path));
    const CostBreakdown b =
        shared ? cost_function_shared(t, cover, image_mb) : cost_function(t, cover, image_mb);
    write_output(out, breakdown_to_json(b));
    return 0;
}

int cmd_train(const FamilyArgs& fa, const TrainConfig& cfg, const std::string& out) {
    const TopologySpec spec = fa.to_spec();
    const TrainResult result = train(spec, cfg);
    write_output(out, serialize_model(result.params, cfg));

    const auto mean_over = [&](std::size_t from, std::size_t count) {
        double s = 0.0;
        for (std::size_t i = from; i < from + count; ++i) s += result.episode_returns[i];
        return s / static_cast<double>(count);
    };
    std::cerr << "trained " << cfg.episodes << " episodes in " << result.seconds << " s\n";
    if (result.episode_returns.size() >= 100) {
        const std::size_t window = 50;
        std::cerr << "mean return, first " << window << " episodes: " << mean_over(0, window)
                  << "\n";
        std::cerr << "mean return, last " << window
                  << " episodes: " << mean_over(result.episode_returns.size() - window, window)
                  << "\n";
    }
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_csv,
              const std::string& plots_dir, unsigned workers, const std::string& dump_config) {
    SuiteConfig cfg =
        config_path.empty() ? SuiteConfig::full_grid() : deserialize_suite(read_file(config_path));
    if (!dump_config.empty()) {
        write_output(dump_config, serialize_suite(cfg));
        return 0;
    }

    const SuiteResult result = run_suite(cfg, workers);
    write_output(out_csv, emit_csv(result.records));

    for (const ModelTrainInfo& info : result.models) {
        std::cerr << "model " << info.family << " n=" << info.n << " (param " << info.param
                  << "): " << info.episodes << " episodes, " << info.seconds << " s training\n";
    }

    if (!plots_dir.empty()) {
        std::filesystem::create_directories(plots_dir);
        std::set<std::string> families;
        for (const BenchRecord& r : result.records) {
            if (r.ok()) families.insert(r.family);
        }
        for (const std::string& family : families) {
            std::vector<BenchRecord> subset;
            for (const BenchRecord& r : result.records) {
                if (r.ok() && r.family == family) subset.push_back(r);
            }
            for (const std::string& metric : {"ext", "cf", "vcs"}) {
                const std::filesystem::path file =
                    std::filesystem::path(plots_dir) / (family + "_" + metric + ".svg");
                write_output(file.string(), emit_plot(subset, metric));
            }
        }
    }

    unsigned failed = 0;
    for (const BenchRecord& r : result.records) {
        if (!r.ok()) {
            ++failed;
            std::cerr << "failed " << r.error << "\n";
        }
    }
    std::cerr << result.records.size() - failed << "/" << result.records.size()
              << " cells succeeded\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex-cover placement toolkit: generators, solvers, network-cost evaluation, "
                 "policy training, and benchmarks"};
    app.require_subcommand(1);

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "Generate a random network graph");
    FamilyArgs gen_args;
    gen_args.add_options(generate_cmd);
    double gen_wifi = 0.0;
    std::string gen_out;
    generate_cmd->add_option("--wifi-ratio", gen_wifi, "Fraction of vertices on WiFi adapters");
    generate_cmd->add_option("-o,--out", gen_out, "Output path (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Compute a vertex cover for a graph document");
    std::string solve_graph, solve_algo = "approx", solve_greedy = "degree", solve_model, solve_out;
    std::uint64_t solve_seed = 0;
    double solve_image = kDefaultImageMB;
    GaConfig solve_ga;
    solve_cmd->add_option("--graph", solve_graph, "Graph JSON path")->required();
    solve_cmd->add_option("--algo", solve_algo, "approx, greedy, genetic, gnosis, or brute-force")
        ->check(CLI::IsMember({"approx", "greedy", "genetic", "gnosis", "brute-force"}));
    solve_cmd->add_option("--greedy-variant", solve_greedy, "degree or edge-pair")
        ->check(CLI::IsMember({"degree", "edge-pair"}));
    solve_cmd->add_option("--seed", solve_seed, "Solver seed");
    solve_cmd->add_option("--image-mb", solve_image, "Image size in MB (genetic fitness)");
    solve_cmd->add_option("--model", solve_model, "Trained model JSON (gnosis)");
    solve_cmd->add_option("--population", solve_ga.population, "Genetic: population size");
    solve_cmd->add_option("--generations", solve_ga.generations, "Genetic: generation count");
    solve_cmd->add_option("--mutation-rate", solve_ga.mutation_rate, "Genetic: per-gene swap rate");
    solve_cmd->add_option("-o,--out", solve_out, "Output path (default stdout)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate placement cost of a cover");
    std::string eval_graph, eval_cover, eval_out;
    double eval_image = kDefaultImageMB;
    bool eval_shared = false;
    eval_cmd->add_option("--graph", eval_graph, "Graph JSON path")->required();
    eval_cmd->add_option("--cover", eval_cover, "Cover JSON path")->required();
    eval_cmd->add_option("--image-mb", eval_image, "Image size in MB");
    eval_cmd->add_flag("--cf-shared", eval_shared,
                       "Charge concurrent transfers with shared (max-min) bandwidth");
    eval_cmd->add_option("-o,--out", eval_out, "Output path (default stdout)");

    // train
    auto* train_cmd = app.add_subcommand("train", "Train a policy on a graph family");
    FamilyArgs train_args;
    train_args.add_options(train_cmd);
    TrainConfig train_cfg;
    std::string train_out, train_advantage = "boosted";
    train_cmd->add_option("--episodes", train_cfg.episodes, "Training episodes");
    train_cmd->add_option("--hidden", train_cfg.hidden_dim, "Hidden embedding width");
    train_cmd->add_option("--layers", train_cfg.layers, "Message-passing rounds");
    train_cmd->add_option("--gamma", train_cfg.gamma, "Discount factor");
    train_cmd->add_option("--actor-lr", train_cfg.actor_lr, "Policy learning rate");
    train_cmd->add_option("--critic-lr", train_cfg.critic_lr, "Value learning rate");
    train_cmd->add_option("--reward-alpha", train_cfg.reward_alpha,
                          "Weight of the covered-edge fraction in the reward");
    train_cmd->add_option("--advantage", train_advantage, "boosted or standard")
        ->check(CLI::IsMember({"boosted", "standard"}));
    train_cmd->add_option("--max-grad-norm", train_cfg.max_grad_norm,
                          "Gradient clipping threshold (0 disables)");
    train_cmd->add_option("-o,--out", train_out, "Model output path (default stdout)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
    std::string bench_config, bench_out = "results.csv", bench_plots, bench_dump;
    unsigned bench_workers = 1;
    bench_cmd->add_option("--config", bench_config, "Suite config JSON (default: full grid)");
    bench_cmd->add_option("--out", bench_out, "CSV output path");
    bench_cmd->add_option("--plots", bench_plots, "Directory for SVG plots");
    bench_cmd->add_option("--workers", bench_workers, "Concurrent cell workers");
    bench_cmd->add_option("--dump-config", bench_dump,
                          "Write the effective suite config JSON and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate_cmd->parsed()) {
            return cmd_generate(gen_args, gen_wifi, 0xADA, gen_out);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_graph, solve_algo, solve_greedy, solve_seed, solve_image,
                             solve_model, solve_ga, solve_out);
        }
        if (eval_cmd->parsed()) {
            return cmd_eval(eval_graph, eval_cover, eval_image, eval_shared, eval_out);
        }
        if (train_cmd->parsed()) {
            train_cfg.seed = train_args.seed;
            train_cfg.advantage = advantage_mode_from_name(train_advantage);
            return cmd_train(train_args, train_cfg, train_out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_config, bench_out, bench_plots, bench_workers, bench_dump);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
