#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "wsnga/ga.hpp"
#include "wsnga/leach.hpp"

namespace wsnga {

using ProtocolParams = std::variant<GAParams, LeachParams>;

struct LifetimeConfig {
    int total_rounds = 1100;
    /// Rounds a GA clustering stays installed before the GA runs again.
    int rounds_per_configuration = 20;
    ProtocolParams protocol = LeachParams{};

    void validate() const;
};

struct RoundRecord {
    int round = 0;  // 1-based
    int alive_count = 0;
    double cumulative_energy = 0.0;
    int heads_this_round = 0;
};

struct LifetimeResult {
    std::vector<RoundRecord> records;
    int initial_alive = 0;
    Eigen::ArrayXd initial_energy;
    Eigen::ArrayXd final_energy;
    int reconfigurations = 0;  // GA runs (0 for LEACH)
};

/// Round-based simulation until `total_rounds` or until every node is dead.
/// The GA protocol re-clusters the alive nodes every
/// rounds_per_configuration rounds and as soon as a serving head dies.
LifetimeResult run_lifetime(const Deployment& deployment, const RadioModel& radio, const LifetimeConfig& config,
                            std::uint64_t seed);

struct LifetimeSummary {
    /// Empty when the event never happened ("survived").
    std::optional<int> first_death_round;
    std::optional<int> last_death_round;
    double total_energy = 0.0;
};

/// First death: first round with fewer alive nodes than `initial_alive`.
/// Last death: first round with none alive.
LifetimeSummary lifetime_summary(std::span<const RoundRecord> records, int initial_alive);
inline LifetimeSummary lifetime_summary(const LifetimeResult& result) {
    return lifetime_summary(result.records, result.initial_alive);
}

}  // namespace wsnga
