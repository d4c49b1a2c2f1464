#include "wsnga/lifetime.hpp"

#include "wsnga/error.hpp"

namespace wsnga {

using detail::require;

void LifetimeConfig::validate() const {
    require(total_rounds >= 1, "total_rounds must be positive");
    require(rounds_per_configuration >= 1, "rounds_per_configuration must be positive");
    std::visit([](const auto& p) { p.validate(); }, protocol);
}

namespace {

RoundRecord record_round(int round, const Eigen::ArrayXd& residual, double cumulative, int heads) {
    return RoundRecord{round, static_cast<int>((residual > 0.0).count()), cumulative, heads};
}

// Runs the GA over the alive nodes and lifts the winning heads back to the
// full node numbering.
Bits cluster_alive_nodes(const Deployment& current, const RadioModel& radio, const GAParams& params,
                         std::uint64_t seed) {
    std::vector<int> ids;
    const Deployment alive = current.alive_subset(ids);
    const EvolutionResult result = evolve(alive, radio, params, seed);
    Bits heads = Bits::Constant(current.size(), false);
    for (std::size_t k = 0; k < ids.size(); ++k)
        if (result.best.chromosome.bits(static_cast<Eigen::Index>(k))) heads(ids[k]) = true;
    return heads;
}

}  // namespace

LifetimeResult run_lifetime(const Deployment& deployment, const RadioModel& radio, const LifetimeConfig& config,
                            std::uint64_t seed) {
    config.validate();
    radio.validate();

    LifetimeResult result;
    result.initial_energy = deployment.energies();
    result.initial_alive = deployment.alive_count();
    Deployment current = deployment;
    double cumulative = 0.0;

    const auto* ga = std::get_if<GAParams>(&config.protocol);
    const auto* leach = std::get_if<LeachParams>(&config.protocol);
    LeachState leach_state(deployment.size());
    Rng leach_rng(seed, Stream::Leach);

    std::optional<Bits> installed;
    int rounds_installed = 0;

    for (int round = 1; round <= config.total_rounds; ++round) {
        if (current.alive_count() == 0) {
            result.records.push_back(record_round(round, current.energies(), cumulative, 0));
            break;
        }

        RoundOutcome outcome;
        if (leach != nullptr) {
            outcome = leach_round(round - 1, current, radio, *leach, leach_state, leach_rng);
        } else {
            bool head_died = false;
            if (installed)
                for (int i = 0; i < current.size(); ++i)
                    if ((*installed)(i) && !current.alive(i)) head_died = true;
            if (!installed || head_died || rounds_installed >= config.rounds_per_configuration) {
                const auto k = static_cast<std::uint64_t>(result.reconfigurations);
                installed = cluster_alive_nodes(current, radio, *ga, derive_seed(seed, Stream::Lifetime, k));
                ++result.reconfigurations;
                rounds_installed = 0;
            }
            ClusterAssignment assignment = assign_to_nearest_heads(*installed, current);
            const Eigen::ArrayXd costs = round_energy_costs(assignment, current, radio);
            outcome = apply_round_costs(current, std::move(assignment), costs);
            ++rounds_installed;
        }

        cumulative += outcome.energy_spent;
        const int heads = outcome.assignment.head_count();
        current = current.with_energies(outcome.residual_energy);
        result.records.push_back(record_round(round, current.energies(), cumulative, heads));
        if (current.alive_count() == 0) break;
    }
    result.final_energy = current.energies();
    return result;
}

LifetimeSummary lifetime_summary(std::span<const RoundRecord> records, int initial_alive) {
    require(!records.empty(), "lifetime_summary needs at least one record");
    LifetimeSummary out;
    for (const RoundRecord& r : records) {
        if (!out.first_death_round && r.alive_count < initial_alive) out.first_death_round = r.round;
        if (!out.last_death_round && r.alive_count == 0 && initial_alive > 0) out.last_death_round = r.round;
    }
    out.total_energy = records.back().cumulative_energy;
    return out;
}

}  // namespace wsnga
