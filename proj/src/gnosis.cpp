#include "vertexplace/gnosis.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vertexplace/rng.hpp"

namespace vertexplace {

using nlohmann::json;

const char* advantage_mode_name(AdvantageMode m) {
    return m == AdvantageMode::BoostedBootstrap ? "boosted" : "standard";
}

AdvantageMode advantage_mode_from_name(const std::string& s) {
    if (s == "boosted") return AdvantageMode::BoostedBootstrap;
    if (s == "standard") return AdvantageMode::Standard;
    throw std::invalid_argument("unknown advantage mode: " + s);
}

void TrainConfig::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma out of range");
    if (!(actor_lr > 0.0)) throw std::invalid_argument("actor learning rate must be positive");
    if (!(critic_lr > 0.0)) throw std::invalid_argument("critic learning rate must be positive");
    if (hidden_dim < 1) throw std::invalid_argument("hidden dimension must be at least 1");
    if (layers < 1) throw std::invalid_argument("layer count must be at least 1");
    if (max_grad_norm < 0.0) throw std::invalid_argument("gradient norm limit must be non-negative");
}

GnosisParams GnosisParams::init(std::uint32_t feature_dim, std::uint32_t hidden_dim,
                                std::uint32_t layers, std::uint64_t seed) {
    if (feature_dim < 1 || hidden_dim < 1 || layers < 1) {
        throw std::invalid_argument("network dimensions must be at least 1");
    }
    GnosisParams p;
    p.feature_dim = feature_dim;
    p.hidden_dim = hidden_dim;
    Rng rng(seed);
    // Fixed draw order: per layer all weight rows then the bias, finally the
    // two heads. Everything uniform in +-gain/sqrt(fan_in). The gain is well
    // above the classic 1/sqrt(fan_in): neighbourhood averaging is strongly
    // contractive on graphs whose node features span a narrow range, and at
    // unit gain the per-node embeddings come out so close to one another that
    // the softmax over logits is indistinguishable from uniform and policy
    // gradients vanish. A gain of 4 per linear stage keeps enough spread for
    // the actor to see (and learn from) differences between vertices.
    constexpr double kInitGain = 4.0;
    for (std::uint32_t k = 0; k < layers; ++k) {
        const std::uint32_t in_dim = k == 0 ? feature_dim : hidden_dim;
        const double bound = kInitGain / std::sqrt(static_cast<double>(in_dim));
        Eigen::MatrixXd w(hidden_dim, in_dim);
        for (std::uint32_t i = 0; i < hidden_dim; ++i) {
            for (std::uint32_t j = 0; j < in_dim; ++j) w(i, j) = rng.uniform(-bound, bound);
        }
        Eigen::VectorXd b(hidden_dim);
        for (std::uint32_t i = 0; i < hidden_dim; ++i) b(i) = rng.uniform(-bound, bound);
        p.weights.push_back(std::move(w));
        p.biases.push_back(std::move(b));
    }
    const double head_bound = kInitGain / std::sqrt(static_cast<double>(hidden_dim));
    p.actor_head.resize(hidden_dim);
    p.critic_head.resize(hidden_dim);
    for (std::uint32_t i = 0; i < hidden_dim; ++i) p.actor_head(i) = rng.uniform(-head_bound, head_bound);
    for (std::uint32_t i = 0; i < hidden_dim; ++i) p.critic_head(i) = rng.uniform(-head_bound, head_bound);
    return p;
}

void GnosisParams::validate() const {
    if (weights.empty() || weights.size() != biases.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const auto expected_in = k == 0 ? feature_dim : hidden_dim;
        if (weights[k].rows() != hidden_dim || weights[k].cols() != expected_in ||
            biases[k].size() != hidden_dim) {
            throw std::invalid_argument("dimension mismatch");
        }
    }
    if (actor_head.size() != hidden_dim || critic_head.size() != hidden_dim) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (!finite()) throw std::invalid_argument("non-finite parameters");
}

bool GnosisParams::finite() const {
    for (const auto& w : weights) {
        if (!w.allFinite()) return false;
    }
    for (const auto& b : biases) {
        if (!b.allFinite()) return false;
    }
    return actor_head.allFinite() && critic_head.allFinite();
}

bool GnosisParams::operator==(const GnosisParams& other) const {
    if (feature_dim != other.feature_dim || hidden_dim != other.hidden_dim ||
        weights.size() != other.weights.size()) {
        return false;
    }
    const auto same = [](const auto& a, const auto& b) {
        return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
    };
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!same(weights[k], other.weights[k]) || !same(biases[k], other.biases[k])) return false;
    }
    return same(actor_head, other.actor_head) && same(critic_head, other.critic_head);
}

MvcState MvcState::initial(const Topology& t) {
    MvcState s;
    s.in_cover.assign(t.n(), 0);
    s.edge_covered.assign(t.edge_count(), 0);
    s.uncovered_count = t.edge_count();
    return s;
}

std::uint32_t MvcState::apply(const Topology& t, std::uint32_t v) {
    if (v >= in_cover.size()) throw std::invalid_argument("dangling vertex id");
    if (in_cover[v]) throw std::invalid_argument("vertex already in cover");
    in_cover[v] = 1;
    order.push_back(v);
    std::uint32_t newly = 0;
    for (const auto& [nbr, eidx] : t.incident(v)) {
        (void)nbr;
        if (!edge_covered[eidx]) {
            edge_covered[eidx] = 1;
            --uncovered_count;
            ++newly;
        }
    }
    return newly;
}

Eigen::MatrixXd MvcState::features(const Topology& t) const {
    const std::uint32_t n = t.n();
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(kStateFeatureDim, n);
    const double max_deg = static_cast<double>(t.max_degree());
    std::vector<std::uint32_t> uncovered_deg(n, 0);
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        if (!edge_covered[e]) {
            ++uncovered_deg[t.edges()[e].u];
            ++uncovered_deg[t.edges()[e].v];
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        x(0, i) = in_cover[i] ? 1.0 : 0.0;
        if (max_deg > 0.0) {
            x(1, i) = static_cast<double>(uncovered_deg[i]) / max_deg;
            x(2, i) = static_cast<double>(t.degree(i)) / max_deg;
        }
    }
    return x;
}

ForwardPass gnn_forward(const GnosisParams& p, const Topology& t, const Eigen::MatrixXd& features) {
    const std::uint32_t n = t.n();
    if (features.rows() != p.feature_dim || features.cols() != n || p.weights.empty()) {
        throw std::invalid_argument("dimension mismatch");
    }
    ForwardPass f;
    f.features = features;
    const Eigen::MatrixXd* prev = &f.features;
    for (std::size_t k = 0; k < p.weights.size(); ++k) {
        Eigen::MatrixXd agg = Eigen::MatrixXd::Zero(prev->rows(), n);
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto& inc = t.incident(i);
            if (inc.empty()) continue;  // isolated vertex aggregates nothing
            for (const auto& [j, eidx] : inc) {
                (void)eidx;
                agg.col(i) += prev->col(j);
            }
            agg.col(i) *= 1.0 / static_cast<double>(inc.size());
        }
        Eigen::MatrixXd pre = p.weights[k] * agg;
        pre.colwise() += p.biases[k];
        f.aggregates.push_back(std::move(agg));
        f.embeddings.push_back(pre.cwiseMax(0.0));
        f.pre.push_back(std::move(pre));
        prev = &f.embeddings.back();
    }
    f.graph_embedding = f.embeddings.back().rowwise().sum();
    f.logits = f.embeddings.back().transpose() * p.actor_head;
    f.value = p.critic_head.dot(f.graph_embedding);
    return f;
}

ForwardPass gnn_forward(const GnosisParams& p, const Topology& t, const MvcState& state) {
    return gnn_forward(p, t, state.features(t));
}

Eigen::VectorXd masked_policy(const Eigen::VectorXd& logits,
                              const std::vector<std::uint8_t>& in_cover) {
    const auto n = static_cast<std::size_t>(logits.size());
    if (in_cover.size() != n) throw std::invalid_argument("dimension mismatch");
    double max_logit = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_cover[i]) {
            any = true;
            max_logit = std::max(max_logit, logits(static_cast<Eigen::Index>(i)));
        }
    }
    if (!any) throw std::runtime_error("no legal action");
    Eigen::VectorXd pi = Eigen::VectorXd::Zero(logits.size());
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_cover[i]) continue;
        const double e = std::exp(logits(static_cast<Eigen::Index>(i)) - max_logit);
        pi(static_cast<Eigen::Index>(i)) = e;
        total += e;
    }
    pi /= total;
    return pi;
}

double td_error(double reward, double gamma, double v_next, double v_curr) {
    return reward + gamma * v_next - v_curr;
}

double advantage(double delta, double gamma, double v_next, double v_curr, AdvantageMode mode) {
    if (mode == AdvantageMode::Standard) return delta;
    return delta + gamma * v_next - v_curr;
}

GnosisGrads GnosisGrads::zeros_like(const GnosisParams& p) {
    GnosisGrads g;
    for (const auto& w : p.weights) g.weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
    for (const auto& b : p.biases) g.biases.push_back(Eigen::VectorXd::Zero(b.size()));
    g.actor_head = Eigen::VectorXd::Zero(p.actor_head.size());
    g.critic_head = Eigen::VectorXd::Zero(p.critic_head.size());
    return g;
}

double GnosisGrads::global_norm() const {
    double sq = 0.0;
    for (const auto& w : weights) sq += w.squaredNorm();
    for (const auto& b : biases) sq += b.squaredNorm();
    sq += actor_head.squaredNorm() + critic_head.squaredNorm();
    return std::sqrt(sq);
}

bool GnosisGrads::finite() const {
    for (const auto& w : weights) {
        if (!w.allFinite()) return false;
    }
    for (const auto& b : biases) {
        if (!b.allFinite()) return false;
    }
    return actor_head.allFinite() && critic_head.allFinite();
}

namespace {

// Shared reverse pass. dlogits is the upstream gradient on per-node logits
// (zero where unused) and dvalue the upstream gradient on the scalar value.
GnosisGrads backward(const GnosisParams& p, const Topology& t, const ForwardPass& fwd,
                     const Eigen::VectorXd& dlogits, double dvalue) {
    const std::uint32_t n = t.n();
    GnosisGrads g = GnosisGrads::zeros_like(p);
    const Eigen::MatrixXd& h_final = fwd.node_embeddings();

    g.actor_head = h_final * dlogits;
    g.critic_head = dvalue * fwd.graph_embedding;

    // Upstream gradient on the final node embeddings: the logit of node i is
    // actor_head . h_i, and the graph embedding is the sum of all h_i.
    Eigen::MatrixXd dh = p.actor_head * dlogits.transpose();
    if (dvalue != 0.0) {
        const Eigen::VectorXd from_value = dvalue * p.critic_head;
        dh.colwise() += from_value;
    }

    for (std::size_t k = p.weights.size(); k-- > 0;) {
        // ReLU gate (derivative 0 at exactly 0).
        Eigen::MatrixXd dpre =
            (fwd.pre[k].array() > 0.0).select(dh.array(), 0.0).matrix();
        g.weights[k] = dpre * fwd.aggregates[k].transpose();
        g.biases[k] = dpre.rowwise().sum();
        if (k == 0) break;  // features carry no parameters
        const Eigen::MatrixXd dagg = p.weights[k].transpose() * dpre;
        Eigen::MatrixXd dh_prev = Eigen::MatrixXd::Zero(dagg.rows(), n);
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto& inc = t.incident(i);
            if (inc.empty()) continue;
            const double inv = 1.0 / static_cast<double>(inc.size());
            for (const auto& [j, eidx] : inc) {
                (void)eidx;
                dh_prev.col(j) += inv * dagg.col(i);
            }
        }
        dh = std::move(dh_prev);
    }
    return g;
}

}  // namespace

GnosisGrads grad_log_policy(const GnosisParams& p, const Topology& t, const MvcState& state,
                            const ForwardPass& fwd, std::uint32_t action) {
    if (!state.legal(action)) throw std::invalid_argument("illegal action");
    const Eigen::VectorXd pi = masked_policy(fwd.logits, state.in_cover);
    Eigen::VectorXd dlogits = -pi;
    dlogits(action) += 1.0;  // d log pi(a) / d logit_i = [i==a] - pi_i on legal nodes
    return backward(p, t, fwd, dlogits, 0.0);
}

GnosisGrads grad_value(const GnosisParams& p, const Topology& t, const ForwardPass& fwd) {
    return backward(p, t, fwd, Eigen::VectorXd::Zero(fwd.logits.size()), 1.0);
}

GnosisParams apply_update(const GnosisParams& p, const GnosisGrads& g, double scale) {
    GnosisParams out = p;
    if (scale == 0.0) return out;
    for (std::size_t k = 0; k < out.weights.size(); ++k) {
        out.weights[k] += scale * g.weights[k];
        out.biases[k] += scale * g.biases[k];
    }
    out.actor_head += scale * g.actor_head;
    out.critic_head += scale * g.critic_head;
    return out;
}

GnosisParams critic_update(const GnosisParams& p, const Topology& t, const MvcState& state,
                           double delta, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("learning rate must be positive");
    const ForwardPass fwd = gnn_forward(p, t, state);
    const GnosisGrads g = grad_value(p, t, fwd);
    if (!g.finite()) throw std::runtime_error("non-finite gradient");
    return apply_update(p, g, epsilon * delta);
}

GnosisParams actor_update(const GnosisParams& p, const Topology& t, const MvcState& state,
                          std::uint32_t action, double adv, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("learning rate must be positive");
    const ForwardPass fwd = gnn_forward(p, t, state);
    const GnosisGrads g = grad_log_policy(p, t, state, fwd, action);
    if (!g.finite()) throw std::runtime_error("non-finite gradient");
    return apply_update(p, g, beta * adv);
}

namespace {

void clip_to_norm(GnosisGrads& g, double max_norm) {
    if (max_norm <= 0.0) return;
    const double norm = g.global_norm();
    if (norm <= max_norm) return;
    const double scale = max_norm / norm;
    for (auto& w : g.weights) w *= scale;
    for (auto& b : g.biases) b *= scale;
    g.actor_head *= scale;
    g.critic_head *= scale;
}

std::uint32_t sample_action(const Eigen::VectorXd& pi, Rng& rng) {
    const double u = rng.uniform();
    double cum = 0.0;
    std::int64_t last_positive = -1;
    for (Eigen::Index i = 0; i < pi.size(); ++i) {
        if (pi(i) <= 0.0) continue;
        last_positive = i;
        cum += pi(i);
        if (u < cum) return static_cast<std::uint32_t>(i);
    }
    return static_cast<std::uint32_t>(last_positive);  // rounding spill-over
}

}  // namespace

namespace {

TrainResult train_impl(const std::function<Topology(std::uint32_t)>& episode_graph,
                       const TrainConfig& cfg) {
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();

    TrainResult result;
    result.params = GnosisParams::init(kStateFeatureDim, cfg.hidden_dim, cfg.layers,
                                       Rng::mix(cfg.seed, 0));
    Rng action_rng(Rng::mix(cfg.seed, 1));

    for (std::uint32_t ep = 0; ep < cfg.episodes; ++ep) {
        const Topology t = episode_graph(ep);
        const double edge_total = static_cast<double>(t.edge_count());

        MvcState state = MvcState::initial(t);
        double episode_return = 0.0;
        while (!state.done()) {
            const ForwardPass fwd = gnn_forward(result.params, t, state);
            if (!fwd.logits.allFinite()) {
                throw std::runtime_error("non-finite logits at episode " + std::to_string(ep));
            }
            const Eigen::VectorXd pi = masked_policy(fwd.logits, state.in_cover);
            const std::uint32_t action = sample_action(pi, action_rng);

            // Gradients are taken at the pre-move parameters and state.
            GnosisGrads g_policy = grad_log_policy(result.params, t, state, fwd, action);
            GnosisGrads g_value = grad_value(result.params, t, fwd);
            if (!g_policy.finite() || !g_value.finite()) {
                throw std::runtime_error("non-finite gradient at episode " + std::to_string(ep));
            }
            clip_to_norm(g_policy, cfg.max_grad_norm);
            clip_to_norm(g_value, cfg.max_grad_norm);

            const double v_curr = fwd.value;
            const std::uint32_t newly = state.apply(t, action);
            const double reward = -1.0 + cfg.reward_alpha * static_cast<double>(newly) / edge_total;
            episode_return += reward;

            // Bootstrap value of the next state, still at pre-update params;
            // terminal states are worth exactly 0.
            const double v_next =
                state.done() ? 0.0 : gnn_forward(result.params, t, state).value;
            const double delta = td_error(reward, cfg.gamma, v_next, v_curr);
            const double adv = advantage(delta, cfg.gamma, v_next, v_curr, cfg.advantage);

            result.params = apply_update(result.params, g_value, cfg.critic_lr * delta);
            result.params = apply_update(result.params, g_policy, cfg.actor_lr * adv);
            if (!result.params.finite()) {
                throw std::runtime_error("non-finite parameters at episode " + std::to_string(ep));
            }
        }
        result.episode_returns.push_back(episode_return);
        result.cover_sizes.push_back(static_cast<std::uint32_t>(state.order.size()));
    }

    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

}  // namespace

TrainResult train(const TopologySpec& tspec, const TrainConfig& cfg) {
    tspec.validate();
    return train_impl(
        [&tspec, &cfg](std::uint32_t ep) {
            TopologySpec episode_spec = tspec;
            episode_spec.seed = Rng::mix(cfg.seed, 2 + ep);
            return generate(episode_spec);
        },
        cfg);
}

TrainResult train(const Topology& fixed, const TrainConfig& cfg) {
    return train_impl([&fixed](std::uint32_t) { return fixed; }, cfg);
}

CoverSolution infer_cover(const GnosisParams& p, const Topology& t) {
    p.validate();
    CoverSolution out;
    out.producer = "gnosis";
    MvcState state = MvcState::initial(t);
    while (!state.done()) {
        const ForwardPass fwd = gnn_forward(p, t, state);
        std::int64_t best = -1;
        for (std::uint32_t v = 0; v < t.n(); ++v) {
            if (!state.legal(v)) continue;
            if (best < 0 || fwd.logits(v) > fwd.logits(static_cast<Eigen::Index>(best))) {
                best = v;  // strict: ties keep the lowest id
            }
        }
        state.apply(t, static_cast<std::uint32_t>(best));
        out.members.push_back(static_cast<std::uint32_t>(best));
    }
    return out;
}

namespace {

std::vector<double*> coeff_ptrs(GnosisParams& p) {
    std::vector<double*> out;
    for (auto& w : p.weights) {
        for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(w.data() + i);
    }
    for (auto& b : p.biases) {
        for (Eigen::Index i = 0; i < b.size(); ++i) out.push_back(b.data() + i);
    }
    for (Eigen::Index i = 0; i < p.actor_head.size(); ++i) out.push_back(p.actor_head.data() + i);
    for (Eigen::Index i = 0; i < p.critic_head.size(); ++i) out.push_back(p.critic_head.data() + i);
    return out;
}

std::vector<double> coeff_values(const GnosisGrads& g) {
    std::vector<double> out;
    for (const auto& w : g.weights) {
        for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(*(w.data() + i));
    }
    for (const auto& b : g.biases) {
        for (Eigen::Index i = 0; i < b.size(); ++i) out.push_back(*(b.data() + i));
    }
    for (Eigen::Index i = 0; i < g.actor_head.size(); ++i) out.push_back(g.actor_head(i));
    for (Eigen::Index i = 0; i < g.critic_head.size(); ++i) out.push_back(g.critic_head(i));
    return out;
}

// Relative error with an absolute floor: differences under 1e-9 are treated
// as zero, which keeps finite-difference noise on near-zero gradients from
// registering as large relative errors.
double rel_error(double analytic, double fd) {
    const double diff = std::abs(analytic - fd);
    if (diff < 1e-9) return 0.0;
    return diff / std::max(std::abs(analytic), std::abs(fd));
}

}  // namespace

GradCheckReport gradient_check(const GnosisParams& p, const Topology& t, double tol,
                               double fd_step) {
    if (t.n() > 10) throw std::invalid_argument("instance too large for gradient check");
    if (t.n() < 1) throw std::invalid_argument("gradient check needs at least one vertex");
    if (!(fd_step > 0.0)) throw std::invalid_argument("step must be positive");
    p.validate();

    GradCheckReport report;
    report.fd_step = fd_step;
    report.tol = tol;

    std::vector<MvcState> states;
    states.push_back(MvcState::initial(t));
    if (t.n() >= 2) {
        MvcState mid = MvcState::initial(t);
        mid.apply(t, 0);
        states.push_back(std::move(mid));  // exercises the cover mask
    }

    for (const MvcState& state : states) {
        const ForwardPass fwd = gnn_forward(p, t, state);
        std::uint32_t action = 0;
        while (!state.legal(action)) ++action;  // lowest legal id

        const auto analytic_policy = coeff_values(grad_log_policy(p, t, state, fwd, action));
        const auto analytic_value = coeff_values(grad_value(p, t, fwd));

        GnosisParams probe = p;
        const auto ptrs = coeff_ptrs(probe);
        for (std::size_t i = 0; i < ptrs.size(); ++i) {
            const double saved = *ptrs[i];
            const auto eval = [&](double shifted) {
                *ptrs[i] = shifted;
                const ForwardPass f = gnn_forward(probe, t, state);
                const Eigen::VectorXd pi = masked_policy(f.logits, state.in_cover);
                return std::pair<double, double>{std::log(pi(action)), f.value};
            };
            const auto [lp_plus, v_plus] = eval(saved + fd_step);
            const auto [lp_minus, v_minus] = eval(saved - fd_step);
            *ptrs[i] = saved;

            const double fd_policy = (lp_plus - lp_minus) / (2.0 * fd_step);
            const double fd_value = (v_plus - v_minus) / (2.0 * fd_step);
            report.max_rel_error_policy =
                std::max(report.max_rel_error_policy, rel_error(analytic_policy[i], fd_policy));
            report.max_rel_error_value =
                std::max(report.max_rel_error_value, rel_error(analytic_value[i], fd_value));
        }
    }
    report.passed = report.max_rel_error_policy <= tol && report.max_rel_error_value <= tol;
    return report;
}

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
    }
    return arr;
}

Eigen::MatrixXd matrix_from_json(const json& arr, Eigen::Index rows, Eigen::Index cols) {
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != rows * cols) {
        throw std::invalid_argument("malformed model document");
    }
    Eigen::MatrixXd m(rows, cols);
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = arr[idx++].get<double>();
    }
    return m;
}

Eigen::VectorXd vector_from_json(const json& arr, Eigen::Index size) {
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != size) {
        throw std::invalid_argument("malformed model document");
    }
    Eigen::VectorXd v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = arr[i].get<double>();
    return v;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

}  // namespace

std::string serialize_model(const GnosisParams& p, const TrainConfig& cfg) {
    p.validate();
    json doc;
    doc["feature_dim"] = p.feature_dim;
    doc["hidden_dim"] = p.hidden_dim;
    doc["layers"] = p.layer_count();
    json weights = json::array();
    json biases = json::array();
    for (std::size_t k = 0; k < p.weights.size(); ++k) {
        weights.push_back(matrix_to_json(p.weights[k]));
        biases.push_back(vector_to_json(p.biases[k]));
    }
    doc["weights"] = weights;
    doc["biases"] = biases;
    doc["actor_head"] = vector_to_json(p.actor_head);
    doc["critic_head"] = vector_to_json(p.critic_head);
    doc["config"] = {
        {"gamma", cfg.gamma},
        {"actor_lr", cfg.actor_lr},
        {"critic_lr", cfg.critic_lr},
        {"episodes", cfg.episodes},
        {"hidden_dim", cfg.hidden_dim},
        {"layers", cfg.layers},
        {"reward_alpha", cfg.reward_alpha},
        {"seed", cfg.seed},
        {"advantage", advantage_mode_name(cfg.advantage)},
        {"max_grad_norm", cfg.max_grad_norm},
    };
    return doc.dump(2);
}

std::pair<GnosisParams, TrainConfig> deserialize_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed model document");
    }
    if (!doc.is_object() || !doc.contains("weights") || !doc.contains("biases")) {
        throw std::invalid_argument("malformed model document");
    }
    try {
        GnosisParams p;
        p.feature_dim = doc.at("feature_dim").get<std::uint32_t>();
        p.hidden_dim = doc.at("hidden_dim").get<std::uint32_t>();
        const auto layers = doc.at("layers").get<std::uint32_t>();
        const json& weights = doc.at("weights");
        const json& biases = doc.at("biases");
        if (weights.size() != layers || biases.size() != layers) {
            throw std::invalid_argument("malformed model document");
        }
        for (std::uint32_t k = 0; k < layers; ++k) {
            const Eigen::Index in_dim = k == 0 ? p.feature_dim : p.hidden_dim;
            p.weights.push_back(matrix_from_json(weights[k], p.hidden_dim, in_dim));
            p.biases.push_back(vector_from_json(biases[k], p.hidden_dim));
        }
        p.actor_head = vector_from_json(doc.at("actor_head"), p.hidden_dim);
        p.critic_head = vector_from_json(doc.at("critic_head"), p.hidden_dim);
        p.validate();

        TrainConfig cfg;
        if (doc.contains("config")) {
            const json& c = doc["config"];
            cfg.gamma = c.value("gamma", cfg.gamma);
            cfg.actor_lr = c.value("actor_lr", cfg.actor_lr);
            cfg.critic_lr = c.value("critic_lr", cfg.critic_lr);
            cfg.episodes = c.value("episodes", cfg.episodes);
            cfg.hidden_dim = c.value("hidden_dim", cfg.hidden_dim);
            cfg.layers = c.value("layers", cfg.layers);
            cfg.reward_alpha = c.value("reward_alpha", cfg.reward_alpha);
            cfg.seed = c.value("seed", cfg.seed);
            cfg.max_grad_norm = c.value("max_grad_norm", cfg.max_grad_norm);
            if (c.contains("advantage")) {
                cfg.advantage = advantage_mode_from_name(c["advantage"].get<std::string>());
            }
        }
        return {std::move(p), cfg};
    } catch (const json::exception&) {
        throw std::invalid_argument("malformed model document");
    }
}

}  // namespace vertexplace
