#include "vertexplace/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "vertexplace/objective.hpp"
#include "vertexplace/rng.hpp"

namespace vertexplace {

using nlohmann::json;

namespace {

const std::vector<std::string> kKnownAlgorithms = {"approx", "greedy", "genetic", "gnosis"};

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void require_integral_param(double param, const char* what) {
    if (!(param >= 1.0) || param != std::floor(param)) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    }
}

TopologySpec make_spec(const FamilyPlan& plan, std::uint32_t n, double param,
                       std::uint64_t topo_seed) {
    TopologySpec ts;
    ts.family = plan.family;
    ts.n = n;
    ts.seed = topo_seed;
    switch (plan.family) {
        case Family::ErdosRenyi:
            ts.p = param;
            break;
        case Family::SmallWorld:
            require_integral_param(param, "small-world lattice parameter");
            ts.k = static_cast<std::uint32_t>(param);
            ts.p = plan.shortcut_p;
            break;
        case Family::BarabasiAlbert:
            require_integral_param(param, "attachment count");
            ts.m = static_cast<std::uint32_t>(param);
            break;
    }
    return ts;
}

}  // namespace

SuiteConfig SuiteConfig::full_grid() {
    SuiteConfig cfg;
    cfg.families = {
        {Family::ErdosRenyi, {0.2, 0.5, 0.7}, 0.5},
        {Family::SmallWorld, {2, 4, 7}, 0.5},
        {Family::BarabasiAlbert, {1, 3, 8}, 0.5},
    };
    cfg.sizes = {64, 128, 256, 512};
    cfg.algorithms = kKnownAlgorithms;
    return cfg;
}

void SuiteConfig::validate() const {
    if (families.empty()) throw std::invalid_argument("no families configured");
    for (const FamilyPlan& plan : families) {
        if (plan.params.empty()) throw std::invalid_argument("family has no parameters");
        if (!(plan.shortcut_p >= 0.0 && plan.shortcut_p <= 1.0)) {
            throw std::invalid_argument("shortcut probability out of range");
        }
    }
    if (sizes.empty()) throw std::invalid_argument("no sizes configured");
    if (algorithms.empty()) throw std::invalid_argument("no algorithms configured");
    for (const std::string& a : algorithms) {
        if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), a) ==
            kKnownAlgorithms.end()) {
            throw std::invalid_argument("unknown algorithm: " + a);
        }
    }
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (!(image_size_mb > 0.0)) throw std::invalid_argument("image size must be positive");
    if (!(wifi_ratio >= 0.0 && wifi_ratio <= 1.0)) {
        throw std::invalid_argument("wifi ratio out of range");
    }
    genetic.validate();
    gnosis.validate();
}

std::string serialize_suite(const SuiteConfig& cfg) {
    json doc;
    json fams = json::array();
    for (const FamilyPlan& plan : cfg.families) {
        json f;
        f["family"] = family_name(plan.family);
        f["params"] = plan.params;
        if (plan.family == Family::SmallWorld) f["shortcut_p"] = plan.shortcut_p;
        fams.push_back(f);
    }
    doc["families"] = fams;
    doc["sizes"] = cfg.sizes;
    doc["algorithms"] = cfg.algorithms;
    doc["repetitions"] = cfg.repetitions;
    doc["base_seed"] = cfg.base_seed;
    doc["image_size_mb"] = cfg.image_size_mb;
    doc["wifi_ratio"] = cfg.wifi_ratio;
    doc["genetic"] = {{"population", cfg.genetic.population},
                      {"generations", cfg.genetic.generations},
                      {"mutation_rate", cfg.genetic.mutation_rate}};
    doc["gnosis"] = {{"gamma", cfg.gnosis.gamma},
                     {"actor_lr", cfg.gnosis.actor_lr},
                     {"critic_lr", cfg.gnosis.critic_lr},
                     {"episodes", cfg.gnosis.episodes},
                     {"hidden_dim", cfg.gnosis.hidden_dim},
                     {"layers", cfg.gnosis.layers},
                     {"reward_alpha", cfg.gnosis.reward_alpha},
                     {"advantage", advantage_mode_name(cfg.gnosis.advantage)},
                     {"max_grad_norm", cfg.gnosis.max_grad_norm}};
    return doc.dump(2);
}

SuiteConfig deserialize_suite(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed document");
    }
    try {
        SuiteConfig cfg = SuiteConfig::full_grid();
        if (doc.contains("families")) {
            cfg.families.clear();
            for (const json& f : doc["families"]) {
                FamilyPlan plan;
                plan.family = family_from_name(f.at("family").get<std::string>());
                plan.params = f.at("params").get<std::vector<double>>();
                plan.shortcut_p = f.value("shortcut_p", 0.5);
                cfg.families.push_back(plan);
            }
        }
        if (doc.contains("sizes")) cfg.sizes = doc["sizes"].get<std::vector<std::uint32_t>>();
        if (doc.contains("algorithms")) {
            cfg.algorithms = doc["algorithms"].get<std::vector<std::string>>();
        }
        cfg.repetitions = doc.value("repetitions", cfg.repetitions);
        cfg.base_seed = doc.value("base_seed", cfg.base_seed);
        cfg.image_size_mb = doc.value("image_size_mb", cfg.image_size_mb);
        cfg.wifi_ratio = doc.value("wifi_ratio", cfg.wifi_ratio);
        if (doc.contains("genetic")) {
            const json& g = doc["genetic"];
            cfg.genetic.population = g.value("population", cfg.genetic.population);
            cfg.genetic.generations = g.value("generations", cfg.genetic.generations);
            cfg.genetic.mutation_rate = g.value("mutation_rate", cfg.genetic.mutation_rate);
        }
        if (doc.contains("gnosis")) {
            const json& g = doc["gnosis"];
            cfg.gnosis.gamma = g.value("gamma", cfg.gnosis.gamma);
            cfg.gnosis.actor_lr = g.value("actor_lr", cfg.gnosis.actor_lr);
            cfg.gnosis.critic_lr = g.value("critic_lr", cfg.gnosis.critic_lr);
            cfg.gnosis.episodes = g.value("episodes", cfg.gnosis.episodes);
            cfg.gnosis.hidden_dim = g.value("hidden_dim", cfg.gnosis.hidden_dim);
            cfg.gnosis.layers = g.value("layers", cfg.gnosis.layers);
            cfg.gnosis.reward_alpha = g.value("reward_alpha", cfg.gnosis.reward_alpha);
            cfg.gnosis.max_grad_norm = g.value("max_grad_norm", cfg.gnosis.max_grad_norm);
            if (g.contains("advantage")) {
                cfg.gnosis.advantage = advantage_mode_from_name(g["advantage"].get<std::string>());
            }
        }
        cfg.validate();
        return cfg;
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed document");
    }
}

BenchRecord run_cell(const TopologySpec& spec, const std::string& algorithm,
                     double image_size_mb, std::uint64_t solver_seed, const RunContext& ctx) {
    BenchRecord rec;
    rec.family = family_name(spec.family);
    rec.n = spec.n;
    rec.param = spec.family_param();
    rec.algorithm = algorithm;
    rec.seed = solver_seed;
    try {
        const Topology base = generate(spec);
        const Topology t = assign_adapters(base, ctx.wifi_ratio, Rng::mix(spec.seed, 0xADA));
        rec.edges = t.edge_count();

        CoverSolution cover;
        const auto start = std::chrono::steady_clock::now();
        if (algorithm == "approx") {
            cover = approx_cover(t, solver_seed);
        } else if (algorithm == "greedy") {
            cover = greedy_cover(t, GreedyVariant::VertexDegree, solver_seed);
        } else if (algorithm == "genetic") {
            cover = genetic_cover(t, ctx.genetic, image_size_mb, solver_seed);
        } else if (algorithm == "gnosis") {
            if (ctx.model == nullptr) throw std::invalid_argument("gnosis requires a trained model");
            cover = infer_cover(*ctx.model, t);
        } else {
            throw std::invalid_argument("unknown algorithm: " + algorithm);
        }
        rec.ext_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        rec.vcs = cover.members.size();
        rec.cf = cost_function(t, cover, image_size_mb).cf;
        return rec;
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "cell family=" << rec.family << " n=" << rec.n << " param=" << rec.param
           << " algorithm=" << algorithm << " seed=" << solver_seed << ": " << e.what();
        throw std::runtime_error(os.str());
    }
}

SuiteResult run_suite(const SuiteConfig& cfg, unsigned workers) {
    cfg.validate();
    SuiteResult result;

    const bool wants_gnosis = std::find(cfg.algorithms.begin(), cfg.algorithms.end(),
                                        "gnosis") != cfg.algorithms.end();

    // One model per (family, size), trained on the family's first parameter
    // variant. Training happens up front and is reported separately from the
    // solver timings.
    std::map<std::pair<std::string, std::uint32_t>, GnosisParams> models;
    if (wants_gnosis) {
        for (const FamilyPlan& plan : cfg.families) {
            const std::string fam = family_name(plan.family);
            for (const std::uint32_t n : cfg.sizes) {
                const std::uint64_t train_seed =
                    Rng::mix(Rng::mix(cfg.base_seed, fnv1a(fam)), Rng::mix(n, 0x6E05));
                TrainConfig tc = cfg.gnosis;
                tc.seed = train_seed;
                const TopologySpec ts = make_spec(plan, n, plan.params.front(), 0);
                TrainResult tr = train(ts, tc);
                models.emplace(std::make_pair(fam, n), std::move(tr.params));
                result.models.push_back({fam, n, plan.params.front(), tc.episodes, tr.seconds});
            }
        }
    }

    struct Cell {
        TopologySpec spec;
        std::string algorithm;
        std::uint64_t solver_seed;
    };
    std::vector<Cell> cells;
    for (const FamilyPlan& plan : cfg.families) {
        const std::string fam = family_name(plan.family);
        const std::uint64_t fam_seed = Rng::mix(cfg.base_seed, fnv1a(fam));
        for (const std::uint32_t n : cfg.sizes) {
            for (const double param : plan.params) {
                const std::uint64_t cell_seed =
                    Rng::mix(Rng::mix(fam_seed, n), std::bit_cast<std::uint64_t>(param));
                for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
                    // One topology per repetition, shared by all algorithms so
                    // they are compared on identical instances.
                    const std::uint64_t topo_seed = Rng::mix(cell_seed, rep);
                    for (const std::string& algo : cfg.algorithms) {
                        cells.push_back({make_spec(plan, n, param, topo_seed), algo,
                                         Rng::mix(topo_seed, fnv1a(algo))});
                    }
                }
            }
        }
    }

    result.records.resize(cells.size());
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= cells.size()) break;
            const Cell& cell = cells[i];
            RunContext ctx;
            ctx.wifi_ratio = cfg.wifi_ratio;
            ctx.genetic = cfg.genetic;
            if (cell.algorithm == "gnosis") {
                const auto it = models.find({family_name(cell.spec.family), cell.spec.n});
                if (it != models.end()) ctx.model = &it->second;
            }
            try {
                result.records[i] =
                    run_cell(cell.spec, cell.algorithm, cfg.image_size_mb, cell.solver_seed, ctx);
            } catch (const std::exception& e) {
                BenchRecord& rec = result.records[i];
                rec.family = family_name(cell.spec.family);
                rec.n = cell.spec.n;
                rec.param = cell.spec.family_param();
                rec.algorithm = cell.algorithm;
                rec.seed = cell.solver_seed;
                rec.error = e.what();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const BenchRecord& a, const BenchRecord& b) {
                  return std::tie(a.family, a.n, a.param, a.algorithm, a.seed) <
                         std::tie(b.family, b.n, b.param, b.algorithm, b.seed);
              });
    return result;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::string out = "family,n,param,algorithm,seed,ext_s,cf,vcs,edges\n";
    for (const BenchRecord& r : records) {
        if (!r.ok()) continue;
        out += r.family;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += format_double(r.param);
        out += ',';
        out += r.algorithm;
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += format_double(r.ext_seconds);
        out += ',';
        out += format_double(r.cf);
        out += ',';
        out += std::to_string(r.vcs);
        out += ',';
        out += std::to_string(r.edges);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed document");
    }
    return v;
}

template <typename T>
T parse_uint(const std::string& s) {
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed document");
    }
    return v;
}

}  // namespace

std::vector<BenchRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "family,n,param,algorithm,seed,ext_s,cf,vcs,edges") {
        throw std::invalid_argument("malformed document");
    }
    std::vector<BenchRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 9) throw std::invalid_argument("malformed document");
        BenchRecord r;
        r.family = cols[0];
        r.n = parse_uint<std::uint32_t>(cols[1]);
        r.param = parse_double(cols[2]);
        r.algorithm = cols[3];
        r.seed = parse_uint<std::uint64_t>(cols[4]);
        r.ext_seconds = parse_double(cols[5]);
        r.cf = parse_double(cols[6]);
        r.vcs = parse_uint<std::uint64_t>(cols[7]);
        r.edges = parse_uint<std::uint64_t>(cols[8]);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

struct SeriesPoint {
    std::uint32_t n;
    double value;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

const char* series_color(const std::string& algorithm) {
    if (algorithm == "approx") return "#1f77b4";
    if (algorithm == "greedy") return "#2ca02c";
    if (algorithm == "genetic") return "#d62728";
    if (algorithm == "gnosis") return "#9467bd";
    return "#7f7f7f";
}

std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

std::string tick_label(double value, bool log_scale) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), log_scale ? "%.2g" : "%g", value);
    return buf;
}

}  // namespace

std::string emit_plot(const std::vector<BenchRecord>& records, const std::string& metric) {
    if (records.empty()) throw std::invalid_argument("no records to plot");
    if (metric != "ext" && metric != "cf" && metric != "vcs") {
        throw std::invalid_argument("unknown metric: " + metric);
    }
    const std::string family = records[0].family;

    // (algorithm, n) -> metric samples
    std::map<std::string, std::map<std::uint32_t, std::vector<double>>> buckets;
    for (const BenchRecord& r : records) {
        if (!r.ok()) continue;
        if (r.family != family) throw std::invalid_argument("records span multiple families");
        double v = 0.0;
        if (metric == "ext") {
            v = r.ext_seconds;
        } else if (metric == "cf") {
            v = r.cf;
        } else {
            v = static_cast<double>(r.vcs);
        }
        if (!std::isfinite(v)) continue;
        buckets[r.algorithm][r.n].push_back(v);
    }
    if (buckets.empty()) throw std::invalid_argument("no records to plot");

    const bool log_scale = metric == "ext";
    std::map<std::string, std::vector<SeriesPoint>> series;
    std::vector<std::uint32_t> sizes;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& [algo, by_n] : buckets) {
        for (const auto& [n, samples] : by_n) {
            double v = median(samples);
            if (log_scale) v = std::max(v, 1e-7);  // keep zero timings plottable
            series[algo].push_back({n, v});
            sizes.push_back(n);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (hi <= lo) hi = lo + (log_scale ? lo : 1.0);  // flat data still needs a range

    const double width = 640, height = 420;
    const double ml = 70, mr = 160, mt = 48, mb = 52;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const auto xpos = [&](std::uint32_t n) {
        if (sizes.size() == 1) return ml + pw / 2;
        const auto it = std::lower_bound(sizes.begin(), sizes.end(), n);
        const double idx = static_cast<double>(it - sizes.begin());
        return ml + pw * idx / static_cast<double>(sizes.size() - 1);
    };
    const auto ypos = [&](double v) {
        double t;
        if (log_scale) {
            t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        } else {
            t = (v - lo) / (hi - lo);
        }
        return mt + ph * (1.0 - t);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    const std::string metric_label =
        metric == "ext" ? "solver time, s (log)" : metric == "cf" ? "placement cost" : "cover size";
    svg << "<text x=\"" << width / 2 << "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"16\">" << metric_label << " by network size (" << family << ")</text>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\"/>\n";
    for (const std::uint32_t n : sizes) {
        const double x = xpos(n);
        svg << "<line x1=\"" << fmt2(x) << "\" y1=\"" << mt + ph << "\" x2=\"" << fmt2(x)
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt2(x) << "\" y=\"" << mt + ph + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << n
            << "</text>\n";
    }
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">vertices</text>\n";
    const int y_ticks = 5;
    for (int i = 0; i <= y_ticks; ++i) {
        const double t = static_cast<double>(i) / y_ticks;
        double v;
        if (log_scale) {
            v = std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)));
        } else {
            v = lo + t * (hi - lo);
        }
        const double y = ypos(v);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt2(y) << "\" x2=\"" << ml << "\" y2=\""
            << fmt2(y) << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << ml << "\" y1=\"" << fmt2(y) << "\" x2=\"" << ml + pw << "\" y2=\""
            << fmt2(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << ml - 9 << "\" y=\"" << fmt2(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(v, log_scale) << "</text>\n";
    }

    double legend_y = mt + 10;
    for (auto& [algo, points] : series) {
        std::sort(points.begin(), points.end(),
                  [](const SeriesPoint& a, const SeriesPoint& b) { return a.n < b.n; });
        const char* color = series_color(algo);
        std::ostringstream path;
        for (std::size_t i = 0; i < points.size(); ++i) {
            path << (i == 0 ? "M" : " L") << fmt2(xpos(points[i].n)) << " "
                 << fmt2(ypos(points[i].value));
        }
        svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        for (const SeriesPoint& pt : points) {
            svg << "<circle cx=\"" << fmt2(xpos(pt.n)) << "\" cy=\"" << fmt2(ypos(pt.value))
                << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
        }
        svg << "<line x1=\"" << ml + pw + 14 << "\" y1=\"" << fmt2(legend_y) << "\" x2=\""
            << ml + pw + 38 << "\" y2=\"" << fmt2(legend_y) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << ml + pw + 44 << "\" y=\"" << fmt2(legend_y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << algo << "</text>\n";
        legend_y += 20;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace vertexplace
