#pragma once

#include <cstdint>

#include "vertexplace/objective.hpp"
#include "vertexplace/topology.hpp"

namespace vertexplace {

enum class GreedyVariant {
    VertexDegree,  // add the vertex covering the most uncovered edges
    EdgePair,      // add both endpoints of a randomly chosen uncovered edge
};

enum class Selection { RouletteWheel };
enum class Crossover { OrderCrossover };

struct GaConfig {
    std::uint32_t population = 100;
    std::uint32_t generations = 150;
    double mutation_rate = 0.1;
    Selection selection = Selection::RouletteWheel;
    Crossover crossover = Crossover::OrderCrossover;

    void validate() const;  // population >= 2, mutation_rate in [0,1]
};

// Matching-based 2-approximation: repeatedly draw a remaining edge uniformly
// at random, take both endpoints, drop every edge now covered. The result is
// a valid cover at most twice the minimum size. Deterministic per seed.
CoverSolution approx_cover(const Topology& t, std::uint64_t seed);

// VertexDegree: classic greedy, fully deterministic (ties to the lowest id;
// the seed is recorded but unused). EdgePair: the both-endpoints variant on a
// seed-chosen edge.
CoverSolution greedy_cover(const Topology& t, GreedyVariant variant = GreedyVariant::VertexDegree,
                           std::uint64_t seed = 0);

// Genetic search over vertex permutations. A chromosome decodes by walking
// the permutation and adding vertices until the prefix covers every edge;
// fitness is 1/(1 + combined placement cost) of the decoded cover. Roulette
// parent selection, order crossover, per-gene swap mutation, elitism of one.
// Returns the best cover decoded across all generations. Deterministic per
// seed.
CoverSolution genetic_cover(const Topology& t, const GaConfig& cfg = {},
                            double image_size_mb = kDefaultImageMB, std::uint64_t seed = 0);

}  // namespace vertexplace
