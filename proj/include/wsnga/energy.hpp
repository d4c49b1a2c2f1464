#pragma once

#include <span>

namespace wsnga {

/// First-order radio model. Transmitting b bits over d meters costs
/// b * (electronics + amplifier * d^2); receiving costs b * electronics.
struct RadioModel {
    double electronics_energy = 50e-9;   // J/bit
    double amplifier_energy = 100e-12;   // J/bit/m^2
    double initial_node_energy = 0.5;    // J
    double aggregation_energy = 5e-9;    // J/bit, lifetime simulation only
    /// Head-side reception term of the cluster energy: false charges (m - 1)
    /// receptions for m members, true charges m.
    bool receive_all_members = false;

    void validate() const;

    /// Same model with every per-bit coefficient multiplied by `factor`.
    RadioModel scaled(double factor) const;
};

double transmit_energy(const RadioModel& model, int bits, double distance);
double receive_energy(const RadioModel& model, int bits);

/// Energy for one cluster: members transmitting to the head, the head
/// receiving them, and the head transmitting one message to the sink.
double cluster_transfer_energy(const RadioModel& model, std::span<const double> member_distances_to_head,
                               double head_to_sink, int bits);

}  // namespace wsnga
