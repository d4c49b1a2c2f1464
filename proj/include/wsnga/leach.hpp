#pragma once

#include <vector>

#include <Eigen/Core>

#include "wsnga/clustering.hpp"
#include "wsnga/energy.hpp"
#include "wsnga/network.hpp"
#include "wsnga/rng.hpp"

namespace wsnga {

struct LeachParams {
    double head_probability = 0.05;

    void validate() const;
    /// Rounds per rotation cycle, ceil(1/P).
    int round_length() const;
};

/// Which nodes already served as head in the current rotation cycle.
struct LeachState {
    std::vector<bool> served;

    explicit LeachState(int node_count) : served(static_cast<std::size_t>(node_count), false) {}
};

/// Election threshold T(n) = P / (1 - P (r mod L)), clamped to 1.
double leach_threshold(const LeachParams& params, int round);

/// Elects this round's heads among alive nodes that have not served in the
/// current cycle (the cycle resets when round % L == 0). If nobody is
/// elected, the eligible alive node nearest the sink is forced to serve,
/// falling back to the nearest alive node. Returns ascending ids.
std::vector<int> leach_elect_heads(int round, const Deployment& deployment, const LeachParams& params,
                                   LeachState& state, Rng& rng);

/// Per-node energy drawn by one data-collection round: members transmit one
/// packet to their head; heads receive each member packet, aggregate it, and
/// send one packet to the sink.
Eigen::ArrayXd round_energy_costs(const ClusterAssignment& assignment, const Deployment& deployment,
                                  const RadioModel& radio);

struct RoundOutcome {
    ClusterAssignment assignment;
    Eigen::ArrayXd residual_energy;
    double energy_spent = 0.0;
};

/// Debits `costs` from the deployment's residual energies, never below zero.
/// The spent total is exactly the sum of the per-node debits.
RoundOutcome apply_round_costs(const Deployment& deployment, ClusterAssignment assignment,
                               const Eigen::ArrayXd& costs);

/// One LEACH round: elect, join nearest heads, charge energies.
RoundOutcome leach_round(int round, const Deployment& deployment, const RadioModel& radio,
                         const LeachParams& params, LeachState& state, Rng& rng);

}  // namespace wsnga
