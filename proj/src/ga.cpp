#include "wsnga/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wsnga/error.hpp"

namespace wsnga {

using detail::require;

void GAParams::validate() const {
    require(population_size >= 1, "population_size must be positive");
    require(generations >= 1, "generations must be positive");
    require(crossover_rate >= 0.0 && crossover_rate <= 1.0, "crossover_rate must lie in [0, 1]");
    require(mutation_rate >= 0.0 && mutation_rate <= 1.0, "mutation_rate must lie in [0, 1]");
    require(initial_head_probability >= 0.0 && initial_head_probability <= 1.0,
            "initial_head_probability must lie in [0, 1]");
    require(elitism_count >= 0 && elitism_count < population_size,
            "elitism_count must lie in [0, population_size)");
    if (fitness.form == FitnessKind::Form::Weighted)
        require(fitness.weights.allFinite(), "fitness weights must be finite");
}

std::size_t Population::best_index() const {
    require(!individuals.empty(), "empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < individuals.size(); ++i)
        if (individuals[i].fitness.F > individuals[best].fitness.F) best = i;
    return best;
}

RouletteWheel::RouletteWheel(std::span<const double> fitness) {
    require(!fitness.empty(), "roulette over an empty population");
    const auto n = static_cast<Eigen::Index>(fitness.size());
    Eigen::ArrayXd w = Eigen::Map<const Eigen::ArrayXd>(fitness.data(), n);
    require(w.allFinite(), "roulette needs finite fitness values");
    if ((w <= 0.0).any()) w -= w.minCoeff();
    const double total = w.sum();
    if (!(total > 0.0)) {
        uniform_ = true;
        w.setOnes();
    }
    probabilities_ = w / w.sum();
    cumulative_.resize(fitness.size());
    std::partial_sum(probabilities_.begin(), probabilities_.end(), cumulative_.begin());
}

std::size_t RouletteWheel::spin(Rng& rng) const {
    const double r = rng.uniform01();
    // First slot whose cumulative probability exceeds r; rounding can leave the
    // last cumulative value a hair below 1, which the clamp absorbs.
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(idx, cumulative_.size() - 1);
}

std::pair<std::size_t, std::size_t> roulette_select(const Population& population, Rng& rng) {
    std::vector<double> f;
    f.reserve(population.individuals.size());
    for (const auto& ind : population.individuals) f.push_back(ind.fitness.F);
    const RouletteWheel wheel(f);
    const std::size_t first = wheel.spin(rng);
    return {first, wheel.spin(rng)};
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b, int cut) {
    require(a.size() == b.size(), "crossover parents differ in length");
    require(cut >= 0 && cut <= a.size(), "crossover cut out of range");
    const Eigen::Index tail = a.size() - cut;
    Bits c1(a.size()), c2(a.size());
    c1 << a.bits.head(cut), b.bits.tail(tail);
    c2 << b.bits.head(cut), a.bits.tail(tail);
    return {Chromosome(std::move(c1)), Chromosome(std::move(c2))};
}

std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a, const Chromosome& b,
                                                         double crossover_rate, Rng& rng) {
    require(a.size() == b.size(), "crossover parents differ in length");
    if (!rng.bernoulli(crossover_rate) || a.size() < 2) return {Chromosome(a.bits), Chromosome(b.bits)};
    const int cut = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a.size() - 1)));
    return crossover_at(a, b, cut);
}

Chromosome apply_mutation_mask(const Chromosome& chromosome, const Bits& mask) {
    require(mask.size() == chromosome.bits.size(), "mutation mask length differs");
    return Chromosome(chromosome.bits != mask);
}

Chromosome mutate(const Chromosome& chromosome, double mutation_rate, Rng& rng) {
    require(mutation_rate >= 0.0 && mutation_rate <= 1.0, "mutation_rate must lie in [0, 1]");
    Bits mask(chromosome.bits.size());
    for (Eigen::Index i = 0; i < mask.size(); ++i) mask(i) = rng.bernoulli(mutation_rate);
    return apply_mutation_mask(chromosome, mask);
}

Chromosome random_chromosome(const Deployment& deployment, double p, Rng& rng) {
    Bits bits(deployment.size());
    for (int i = 0; i < deployment.size(); ++i) {
        const bool head = rng.bernoulli(p);
        bits(i) = head && deployment.alive(i);
    }
    Chromosome c(std::move(bits));
    repair(c, deployment);
    return c;
}

namespace {

GenerationMetrics summarize(const Population& pop) {
    const std::size_t b = pop.best_index();
    const auto& best = pop.individuals[b];
    double sum = 0.0;
    for (const auto& ind : pop.individuals) sum += ind.fitness.F;
    return GenerationMetrics{pop.generation_index,
                             best.fitness.F,
                             sum / static_cast<double>(pop.individuals.size()),
                             best.fitness.TCH,
                             best.fitness.RCSD,
                             best.fitness.E,
                             best.chromosome.to_string()};
}

Individual make_individual(const FitnessEvaluator& evaluator, Chromosome c) {
    repair(c, evaluator.deployment());
    FitnessBreakdown fitness = evaluator.evaluate(c);
    Individual ind{std::move(c), fitness};
    ind.chromosome.cached_fitness = ind.fitness.F;
    return ind;
}

}  // namespace

EvolutionResult evolve(const Deployment& deployment, const RadioModel& radio, const GAParams& params,
                       std::uint64_t seed) {
    params.validate();
    require(deployment.alive_count() >= 1, "evolve needs at least one alive node");
    const FitnessEvaluator evaluator(deployment, radio, params.fitness);
    Rng rng(seed, Stream::Evolution);

    Population pop;
    pop.individuals.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i)
        pop.individuals.push_back(
            make_individual(evaluator, random_chromosome(deployment, params.initial_head_probability, rng)));

    EvolutionResult result;
    result.trace.reserve(static_cast<std::size_t>(params.generations) + 1);
    result.trace.push_back(summarize(pop));
    result.best = pop.individuals[pop.best_index()];

    for (int g = 1; g <= params.generations; ++g) {
        // Elites in descending fitness; stable so equal fitness keeps the earlier index.
        std::vector<std::size_t> order(pop.individuals.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return pop.individuals[x].fitness.F > pop.individuals[y].fitness.F;
        });

        std::vector<double> f;
        f.reserve(pop.individuals.size());
        for (const auto& ind : pop.individuals) f.push_back(ind.fitness.F);
        const RouletteWheel wheel(f);

        Population next;
        next.generation_index = g;
        next.individuals.reserve(pop.individuals.size());
        for (int e = 0; e < params.elitism_count; ++e) next.individuals.push_back(pop.individuals[order[e]]);

        while (next.individuals.size() < pop.individuals.size()) {
            const std::size_t ia = wheel.spin(rng);
            const std::size_t ib = wheel.spin(rng);
            auto [c1, c2] = single_point_crossover(pop.individuals[ia].chromosome, pop.individuals[ib].chromosome,
                                                   params.crossover_rate, rng);
            for (Chromosome* child : {&c1, &c2}) {
                Chromosome mutated = mutate(*child, params.mutation_rate, rng);
                if (next.individuals.size() < pop.individuals.size())
                    next.individuals.push_back(make_individual(evaluator, std::move(mutated)));
            }
        }
        pop = std::move(next);
        result.trace.push_back(summarize(pop));
        const auto& gen_best = pop.individuals[pop.best_index()];
        if (gen_best.fitness.F > result.best.fitness.F) result.best = gen_best;
    }
    return result;
}

}  // namespace wsnga
