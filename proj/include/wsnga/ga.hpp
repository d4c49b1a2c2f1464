#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "wsnga/clustering.hpp"
#include "wsnga/rng.hpp"

namespace wsnga {

/// Generational GA settings. Defaults are the reference 200-node experiment.
struct GAParams {
    int population_size = 100;
    double crossover_rate = 0.8;
    double mutation_rate = 0.3;  // per bit
    int generations = 200;
    int elitism_count = 1;
    double initial_head_probability = 0.5;
    FitnessKind fitness = FitnessKind::eq2();

    void validate() const;
};

struct Individual {
    Chromosome chromosome;
    FitnessBreakdown fitness;
};

struct Population {
    std::vector<Individual> individuals;
    int generation_index = 0;

    std::size_t best_index() const;
};

struct GenerationMetrics {
    int generation = 0;
    double best_F = 0.0;
    double mean_F = 0.0;
    int best_TCH = 0;
    double best_RCSD = 0.0;
    double best_E = 0.0;
    std::string best_chromosome;
};

struct EvolutionResult {
    /// generations + 1 rows: the initial population, then one per breeding step.
    std::vector<GenerationMetrics> trace;
    Individual best;
};

/// Fitness-proportionate sampling. Weights are the raw fitness values, shifted
/// by the minimum when any value is <= 0; all-zero weights select uniformly.
class RouletteWheel {
public:
    explicit RouletteWheel(std::span<const double> fitness);

    std::size_t spin(Rng& rng) const;
    const Eigen::ArrayXd& probabilities() const { return probabilities_; }
    bool uniform_fallback() const { return uniform_; }

private:
    Eigen::ArrayXd probabilities_;
    std::vector<double> cumulative_;
    bool uniform_ = false;
};

/// Two independent spins; the parents may coincide.
std::pair<std::size_t, std::size_t> roulette_select(const Population& population, Rng& rng);

/// With probability `crossover_rate` swaps the suffixes after a cut drawn
/// uniformly from [1, N-1]; otherwise returns copies. Children are not repaired.
std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a, const Chromosome& b,
                                                         double crossover_rate, Rng& rng);

/// Suffix swap at a fixed cut.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, int cut);

/// Flips every bit where `mask` is set.
Chromosome apply_mutation_mask(const Chromosome& chromosome, const Bits& mask);

/// Flips each bit independently with probability `mutation_rate`. Not repaired.
Chromosome mutate(const Chromosome& chromosome, double mutation_rate, Rng& rng);

/// Random initial chromosome: each alive node is a head with probability p.
Chromosome random_chromosome(const Deployment& deployment, double p, Rng& rng);

/// Runs the GA. All randomness comes from the Evolution stream of `seed`.
EvolutionResult evolve(const Deployment& deployment, const RadioModel& radio, const GAParams& params,
                       std::uint64_t seed);

}  // namespace wsnga
