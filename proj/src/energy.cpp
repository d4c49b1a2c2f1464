#include "wsnga/energy.hpp"

#include <algorithm>
#include <cmath>

#include "wsnga/error.hpp"

namespace wsnga {

using detail::require;

void RadioModel::validate() const {
    auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
    require(ok(electronics_energy), "electronics_energy must be finite and >= 0");
    require(ok(amplifier_energy), "amplifier_energy must be finite and >= 0");
    require(ok(aggregation_energy), "aggregation_energy must be finite and >= 0");
    require(std::isfinite(initial_node_energy) && initial_node_energy > 0.0,
            "initial_node_energy must be positive");
}

RadioModel RadioModel::scaled(double factor) const {
    RadioModel out = *this;
    out.electronics_energy *= factor;
    out.amplifier_energy *= factor;
    out.aggregation_energy *= factor;
    return out;
}

double transmit_energy(const RadioModel& model, int bits, double distance) {
    require(bits > 0, "bits must be positive");
    require(distance >= 0.0, "distance must be non-negative");
    const double b = bits;
    return b * model.electronics_energy + b * model.amplifier_energy * distance * distance;
}

double receive_energy(const RadioModel& model, int bits) {
    require(bits > 0, "bits must be positive");
    return static_cast<double>(bits) * model.electronics_energy;
}

double cluster_transfer_energy(const RadioModel& model, std::span<const double> member_distances_to_head,
                               double head_to_sink, int bits) {
    double members = 0.0;
    for (double d : member_distances_to_head) members += transmit_energy(model, bits, d);
    const auto m = static_cast<long>(member_distances_to_head.size());
    const long receptions = model.receive_all_members ? m : std::max(m - 1, 0L);
    return members + static_cast<double>(receptions) * receive_energy(model, bits) +
           transmit_energy(model, bits, head_to_sink);
}

}  // namespace wsnga
