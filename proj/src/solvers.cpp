#include "vertexplace/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "vertexplace/rng.hpp"

namespace vertexplace {

void GaConfig::validate() const {
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (generations < 1) throw std::invalid_argument("generations must be at least 1");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation rate out of range");
    }
}

namespace {

CoverSolution edge_pair_core(const Topology& t, std::uint64_t seed, const char* producer) {
    Rng rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> remaining;
    remaining.reserve(t.edge_count());
    for (const Edge& e : t.edges()) remaining.emplace_back(e.u, e.v);

    CoverSolution out;
    out.producer = producer;
    out.seed = seed;
    while (!remaining.empty()) {
        const auto [u, v] = remaining[rng.below(remaining.size())];
        out.members.push_back(u);
        out.members.push_back(v);
        std::erase_if(remaining, [u = u, v = v](const auto& e) {
            return e.first == u || e.first == v || e.second == u || e.second == v;
        });
    }
    return out;
}

}  // namespace

CoverSolution approx_cover(const Topology& t, std::uint64_t seed) {
    return edge_pair_core(t, seed, "approx");
}

CoverSolution greedy_cover(const Topology& t, GreedyVariant variant, std::uint64_t seed) {
    if (variant == GreedyVariant::EdgePair) {
        return edge_pair_core(t, seed, "greedy_edge_pair");
    }

    CoverSolution out;
    out.producer = "greedy_degree";
    out.seed = seed;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> remaining;
    remaining.reserve(t.edge_count());
    for (const Edge& e : t.edges()) remaining.emplace_back(e.u, e.v);

    std::vector<std::uint32_t> count(t.n(), 0);
    while (!remaining.empty()) {
        std::fill(count.begin(), count.end(), 0u);
        for (const auto& [u, v] : remaining) {
            ++count[u];
            ++count[v];
        }
        std::uint32_t best = 0;
        for (std::uint32_t v = 1; v < t.n(); ++v) {
            if (count[v] > count[best]) best = v;  // strict: ties keep the lowest id
        }
        out.members.push_back(best);
        std::erase_if(remaining, [best](const auto& e) {
            return e.first == best || e.second == best;
        });
    }
    return out;
}

namespace {

struct Individual {
    std::vector<std::uint32_t> perm;
    std::vector<std::uint32_t> cover;  // decoded prefix
    double cf = 0.0;
    double fitness = 0.0;
};

// Shortest permutation prefix whose vertices cover every edge.
std::vector<std::uint32_t> decode_prefix(const Topology& t,
                                         const std::vector<std::uint32_t>& perm) {
    std::vector<std::uint32_t> cover;
    std::size_t uncovered = t.edge_count();
    if (uncovered == 0) return cover;
    std::vector<std::uint8_t> edge_done(t.edge_count(), 0);
    std::vector<std::uint8_t> in(t.n(), 0);
    for (std::uint32_t v : perm) {
        cover.push_back(v);
        in[v] = 1;
        for (const auto& [nbr, eidx] : t.incident(v)) {
            (void)nbr;
            if (!edge_done[eidx]) {
                edge_done[eidx] = 1;
                --uncovered;
            }
        }
        if (uncovered == 0) break;
    }
    return cover;
}

void evaluate(const Topology& t, double image_size_mb, Individual& ind) {
    ind.cover = decode_prefix(t, ind.perm);
    CoverSolution s{ind.cover, "genetic", 0};
    ind.cf = cost_function(t, s, image_size_mb).cf;
    ind.fitness = 1.0 / (1.0 + ind.cf);
}

std::size_t roulette(const std::vector<Individual>& pop, double total, Rng& rng) {
    if (!(total > 0.0)) return rng.below(pop.size());  // degenerate: uniform
    double u = rng.uniform() * total;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        u -= pop[i].fitness;
        if (u < 0.0) return i;
    }
    return pop.size() - 1;  // guard against accumulated rounding
}

std::vector<std::uint32_t> order_crossover(const std::vector<std::uint32_t>& p1,
                                           const std::vector<std::uint32_t>& p2, Rng& rng) {
    const std::size_t n = p1.size();
    if (n < 2) return p1;
    std::size_t a = rng.below(n);
    std::size_t b = rng.below(n);
    if (a > b) std::swap(a, b);

    std::vector<std::uint32_t> child(n, 0);
    std::vector<std::uint8_t> used(n, 0);
    for (std::size_t i = a; i <= b; ++i) {
        child[i] = p1[i];
        used[p1[i]] = 1;
    }
    // Remaining genes keep their order in p2, reading and writing cyclically
    // from just past the copied slice.
    std::size_t pos = (b + 1) % n;
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t gene = p2[(b + 1 + k) % n];
        if (used[gene]) continue;
        child[pos] = gene;
        pos = (pos + 1) % n;
    }
    return child;
}

void mutate(std::vector<std::uint32_t>& perm, double rate, Rng& rng) {
    const std::size_t n = perm.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.uniform() < rate) {
            std::swap(perm[i], perm[rng.below(n)]);
        }
    }
}

}  // namespace

CoverSolution genetic_cover(const Topology& t, const GaConfig& cfg, double image_size_mb,
                            std::uint64_t seed) {
    cfg.validate();
    CoverSolution out;
    out.producer = "genetic";
    out.seed = seed;
    if (t.edge_count() == 0) return out;  // empty prefix already covers nothing

    Rng rng(seed);
    std::vector<std::uint32_t> base(t.n());
    for (std::uint32_t i = 0; i < t.n(); ++i) base[i] = i;

    std::vector<Individual> pop(cfg.population);
    for (auto& ind : pop) {
        ind.perm = base;
        rng.shuffle(ind.perm);
        evaluate(t, image_size_mb, ind);
    }

    std::vector<std::uint32_t> best_cover;
    double best_cf = std::numeric_limits<double>::infinity();
    const auto track_best = [&] {
        for (const auto& ind : pop) {
            if (ind.cf < best_cf) {
                best_cf = ind.cf;
                best_cover = ind.cover;
            }
        }
    };
    track_best();

    for (std::uint32_t g = 0; g < cfg.generations; ++g) {
        double total = 0.0;
        std::size_t elite = 0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            total += pop[i].fitness;
            if (pop[i].cf < pop[elite].cf) elite = i;
        }
        std::vector<Individual> next;
        next.reserve(pop.size());
        next.push_back(pop[elite]);  // elitism of one
        while (next.size() < pop.size()) {
            const Individual& pa = pop[roulette(pop, total, rng)];
            const Individual& pb = pop[roulette(pop, total, rng)];
            Individual child;
            child.perm = order_crossover(pa.perm, pb.perm, rng);
            mutate(child.perm, cfg.mutation_rate, rng);
            evaluate(t, image_size_mb, child);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        track_best();
    }

    out.members = best_cover;
    return out;
}

}  // namespace vertexplace
