#include "wsnga/leach.hpp"

#include <algorithm>
#include <cmath>

#include "wsnga/error.hpp"

namespace wsnga {

using detail::require;

void LeachParams::validate() const {
    require(head_probability > 0.0 && head_probability < 1.0, "LEACH head_probability must lie in (0, 1)");
}

int LeachParams::round_length() const {
    validate();
    return static_cast<int>(std::ceil(1.0 / head_probability - 1e-12));
}

double leach_threshold(const LeachParams& params, int round) {
    require(round >= 0, "round must be non-negative");
    const int phase = round % params.round_length();
    const double denom = 1.0 - params.head_probability * phase;
    if (denom <= 0.0) return 1.0;
    return std::min(1.0, params.head_probability / denom);
}

std::vector<int> leach_elect_heads(int round, const Deployment& deployment, const LeachParams& params,
                                   LeachState& state, Rng& rng) {
    require(state.served.size() == static_cast<std::size_t>(deployment.size()), "LEACH state size mismatch");
    require(deployment.alive_count() >= 1, "LEACH election needs an alive node");
    if (round % params.round_length() == 0) std::fill(state.served.begin(), state.served.end(), false);

    const double threshold = leach_threshold(params, round);
    std::vector<int> heads;
    for (int i = 0; i < deployment.size(); ++i) {
        if (!deployment.alive(i) || state.served[static_cast<std::size_t>(i)]) continue;
        if (rng.uniform01() < threshold) heads.push_back(i);
    }
    if (heads.empty()) {
        const Eigen::VectorXd d = deployment.sink_distances();
        int forced = -1;
        for (bool eligible_only : {true, false}) {
            for (int i = 0; i < deployment.size(); ++i) {
                if (!deployment.alive(i)) continue;
                if (eligible_only && state.served[static_cast<std::size_t>(i)]) continue;
                if (forced < 0 || d(i) < d(forced)) forced = i;
            }
            if (forced >= 0) break;
        }
        heads.push_back(forced);
    }
    for (int h : heads) state.served[static_cast<std::size_t>(h)] = true;
    return heads;
}

Eigen::ArrayXd round_energy_costs(const ClusterAssignment& assignment, const Deployment& deployment,
                                  const RadioModel& radio) {
    const int n = deployment.size();
    const int bits = deployment.packet_bits();
    Eigen::ArrayXd cost = Eigen::ArrayXd::Zero(n);
    const double per_reception = receive_energy(radio, bits) + static_cast<double>(bits) * radio.aggregation_energy;
    for (int v = 0; v < n; ++v) {
        const int h = assignment.head_of[static_cast<std::size_t>(v)];
        if (h < 0 || !deployment.alive(v)) continue;
        if (h == v) {
            cost(v) += transmit_energy(radio, bits, distance(deployment.position(v), deployment.sink()));
        } else if (deployment.alive(h)) {
            cost(v) += transmit_energy(radio, bits, distance(deployment.position(v), deployment.position(h)));
            cost(h) += per_reception;
        }
    }
    return cost;
}

RoundOutcome apply_round_costs(const Deployment& deployment, ClusterAssignment assignment,
                               const Eigen::ArrayXd& costs) {
    require(costs.size() == deployment.size(), "cost vector length differs from node count");
    RoundOutcome out;
    out.assignment = std::move(assignment);
    out.residual_energy = deployment.energies();
    for (int i = 0; i < deployment.size(); ++i) {
        const double spent = std::min(costs(i), out.residual_energy(i));
        out.residual_energy(i) -= spent;
        out.energy_spent += spent;
    }
    return out;
}

RoundOutcome leach_round(int round, const Deployment& deployment, const RadioModel& radio,
                         const LeachParams& params, LeachState& state, Rng& rng) {
    const std::vector<int> heads = leach_elect_heads(round, deployment, params, state, rng);
    Bits mask = Bits::Constant(deployment.size(), false);
    for (int h : heads) mask(h) = true;
    ClusterAssignment assignment = assign_to_nearest_heads(mask, deployment);
    const Eigen::ArrayXd costs = round_energy_costs(assignment, deployment, radio);
    return apply_round_costs(deployment, std::move(assignment), costs);
}

}  // namespace wsnga
