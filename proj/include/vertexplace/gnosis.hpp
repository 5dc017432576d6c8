#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "vertexplace/objective.hpp"
#include "vertexplace/topology.hpp"

namespace vertexplace {

constexpr std::uint32_t kStateFeatureDim = 3;

// How the policy-gradient weight A is derived from the one-step TD error.
//   BoostedBootstrap (default): A = delta + gamma*v_next - v_curr, i.e. the
//     bootstrap correction enters a second time on top of the TD error.
//   Standard: A = delta.
enum class AdvantageMode { BoostedBootstrap, Standard };

const char* advantage_mode_name(AdvantageMode m);            // "boosted" | "standard"
AdvantageMode advantage_mode_from_name(const std::string&);

struct TrainConfig {
    double gamma = 0.99;
    double actor_lr = 1e-3;   // policy step size
    double critic_lr = 1e-3;  // value step size
    std::uint32_t episodes = 2000;
    std::uint32_t hidden_dim = 64;
    std::uint32_t layers = 3;
    double reward_alpha = 2.0;  // weight on the covered-edge fraction in the reward
    std::uint64_t seed = 0;
    AdvantageMode advantage = AdvantageMode::BoostedBootstrap;
    // Gradients above this global L2 norm are rescaled onto it before a
    // training step; 0 disables. The sum readout makes raw value gradients
    // grow with graph size, so training needs this guard at larger n.
    double max_grad_norm = 5.0;

    void validate() const;
};

// Message-passing network weights plus the two linear heads.
//   weights[0]: hidden x feature_dim, weights[k>0]: hidden x hidden
//   actor head: node embedding -> logit; critic head: graph embedding -> value
struct GnosisParams {
    std::uint32_t feature_dim = 0;
    std::uint32_t hidden_dim = 0;
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Eigen::VectorXd actor_head;
    Eigen::VectorXd critic_head;

    std::uint32_t layer_count() const { return static_cast<std::uint32_t>(weights.size()); }

    // All entries uniform in +-1/sqrt(fan_in), drawn in a fixed order from
    // the seed.
    static GnosisParams init(std::uint32_t feature_dim, std::uint32_t hidden_dim,
                             std::uint32_t layers, std::uint64_t seed);

    void validate() const;  // dimension chain + finiteness
    bool finite() const;
    bool operator==(const GnosisParams& other) const;
};

// Partial vertex cover being grown one vertex at a time.
struct MvcState {
    std::vector<std::uint8_t> in_cover;      // per vertex
    std::vector<std::uint8_t> edge_covered;  // per edge
    std::size_t uncovered_count = 0;
    std::vector<std::uint32_t> order;  // vertices in the order they were added

    static MvcState initial(const Topology& t);

    bool done() const { return uncovered_count == 0; }
    bool legal(std::uint32_t v) const { return v < in_cover.size() && !in_cover[v]; }

    // Adds v to the cover; returns how many edges became covered by this
    // move. Throws std::invalid_argument if v is out of range or already in
    // the cover.
    std::uint32_t apply(const Topology& t, std::uint32_t v);

    // Per-vertex features, one column per vertex:
    //   [ in cover, uncovered incident edges / max degree, degree / max degree ]
    // A degree-0 graph has max degree 0; both ratios are defined as 0 then.
    Eigen::MatrixXd features(const Topology& t) const;
};

// Everything one forward evaluation produces, cached for backprop.
struct ForwardPass {
    Eigen::MatrixXd features;                  // feature_dim x n
    std::vector<Eigen::MatrixXd> aggregates;   // per layer: mean of neighbor inputs
    std::vector<Eigen::MatrixXd> pre;          // per layer: W * aggregate + b
    std::vector<Eigen::MatrixXd> embeddings;   // per layer: ReLU(pre)
    Eigen::VectorXd graph_embedding;           // sum of final node embeddings
    Eigen::VectorXd logits;                    // actor head over node embeddings
    double value = 0.0;                        // critic head over graph embedding

    const Eigen::MatrixXd& node_embeddings() const { return embeddings.back(); }
};

// K rounds of h_i = ReLU(mean over neighbors j of W h_j + b), starting from
// the given feature columns; isolated vertices aggregate a zero vector. The
// graph embedding is the plain sum of final node embeddings. Throws
// std::invalid_argument("dimension mismatch") when the feature rows do not
// match p.feature_dim.
ForwardPass gnn_forward(const GnosisParams& p, const Topology& t, const Eigen::MatrixXd& features);
ForwardPass gnn_forward(const GnosisParams& p, const Topology& t, const MvcState& state);

// Probability over vertices: softmax of logits restricted to legal (not yet
// in cover) vertices; illegal vertices get exactly 0. Throws when no vertex
// is legal.
Eigen::VectorXd masked_policy(const Eigen::VectorXd& logits,
                              const std::vector<std::uint8_t>& in_cover);

double td_error(double reward, double gamma, double v_next, double v_curr);
double advantage(double delta, double gamma, double v_next, double v_curr,
                 AdvantageMode mode = AdvantageMode::BoostedBootstrap);

// Gradient holder with the same shape as GnosisParams.
struct GnosisGrads {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    Eigen::VectorXd actor_head;
    Eigen::VectorXd critic_head;

    static GnosisGrads zeros_like(const GnosisParams& p);
    double global_norm() const;
    bool finite() const;
};

// d log pi(action | state) / d params, with pi the masked softmax. The critic
// head block is zero. `fwd` must come from gnn_forward on (p, t, state).
GnosisGrads grad_log_policy(const GnosisParams& p, const Topology& t, const MvcState& state,
                            const ForwardPass& fwd, std::uint32_t action);

// d value / d params. The actor head block is zero.
GnosisGrads grad_value(const GnosisParams& p, const Topology& t, const ForwardPass& fwd);

// params + scale * grads, no clipping.
GnosisParams apply_update(const GnosisParams& p, const GnosisGrads& g, double scale);

// One semi-gradient TD(0) critic step: params + epsilon * delta * grad V.
// Throws std::runtime_error("non-finite gradient") when the gradient blows
// up.
GnosisParams critic_update(const GnosisParams& p, const Topology& t, const MvcState& state,
                           double delta, double epsilon);

// One policy-gradient step: params + beta * adv * grad log pi(action|state).
GnosisParams actor_update(const GnosisParams& p, const Topology& t, const MvcState& state,
                          std::uint32_t action, double adv, double beta);

struct TrainResult {
    GnosisParams params;
    std::vector<double> episode_returns;        // undiscounted sum of rewards
    std::vector<std::uint32_t> cover_sizes;     // final cover size per episode
    double seconds = 0.0;
};

// Online actor-critic training. Every episode draws a fresh topology from
// tspec (seed stream derived from cfg.seed; tspec.seed itself is not used),
// starts from an empty cover, and walks: sample a legal vertex from the
// policy, add it, reward = -1 + reward_alpha * (newly covered / |E|), then a
// critic TD(0) step and an actor step (both gradients taken at the
// pre-update parameters), until every edge is covered. Bit-identical for
// identical (tspec, cfg).
TrainResult train(const TopologySpec& tspec, const TrainConfig& cfg);

// Same training loop on one fixed graph: every episode replays the given
// topology instead of drawing a fresh one.
TrainResult train(const Topology& fixed, const TrainConfig& cfg);

// Greedy decoding: repeatedly add the legal vertex with the highest policy
// probability (lowest id on ties) until every edge is covered. Valid by
// construction for any finite parameters.
CoverSolution infer_cover(const GnosisParams& p, const Topology& t);

struct GradCheckReport {
    double max_rel_error_policy = 0.0;
    double max_rel_error_value = 0.0;
    double fd_step = 0.0;
    double tol = 0.0;
    bool passed = false;
};

// Central finite-difference check of grad_log_policy and grad_value over
// every parameter, on the empty-cover state and (when available) a one-move
// state. Guarded to n <= 10.
GradCheckReport gradient_check(const GnosisParams& p, const Topology& t, double tol = 1e-4,
                               double fd_step = 1e-5);

// Model document: layer shapes, row-major coefficient arrays, and the
// training configuration that produced the parameters.
std::string serialize_model(const GnosisParams& p, const TrainConfig& cfg);
std::pair<GnosisParams, TrainConfig> deserialize_model(const std::string& text);

}  // namespace vertexplace
