#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "wsnga/geometry.hpp"

namespace wsnga {

/// Sensor field description. The field is the axis-aligned rectangle of the
/// given size centered on the origin; the sink may sit anywhere, including
/// outside the field.
struct NetworkConfig {
    int node_count = 200;
    double field_width = 200.0;
    double field_height = 200.0;
    Point2d sink_position = Point2d::Zero();
    std::uint64_t seed = 1;
    int packet_bits = 2000;

    void validate() const;

    Point2d field_min() const { return {-0.5 * field_width, -0.5 * field_height}; }
    Point2d field_max() const { return {0.5 * field_width, 0.5 * field_height}; }
};

struct Node {
    int id = 0;
    Point2d position = Point2d::Zero();
    double residual_energy = 0.0;
    bool alive = false;
};

/// Immutable node layout. Aliveness is derived from residual energy, so a
/// node is alive exactly when its energy is positive.
class Deployment {
public:
    Deployment(NetworkConfig config, Positions2d positions, Eigen::ArrayXd energies);

    const NetworkConfig& config() const { return config_; }
    int size() const { return static_cast<int>(positions_.cols()); }
    const Point2d& sink() const { return config_.sink_position; }
    int packet_bits() const { return config_.packet_bits; }

    const Positions2d& positions() const { return positions_; }
    auto position(int id) const { return positions_.col(id); }
    const Eigen::ArrayXd& energies() const { return energies_; }
    bool alive(int id) const { return energies_(id) > 0.0; }
    int alive_count() const { return static_cast<int>((energies_ > 0.0).count()); }
    Eigen::Array<bool, Eigen::Dynamic, 1> alive_mask() const { return energies_ > 0.0; }

    Node node(int id) const;
    std::vector<Node> nodes() const;

    /// Distance of every node to the sink.
    Eigen::VectorXd sink_distances() const { return distances_to(positions_, sink()); }

    /// Same layout, different residual energies.
    Deployment with_energies(Eigen::ArrayXd energies) const;

    /// Alive nodes only, renumbered 0..k-1. `original_ids[k]` maps back.
    Deployment alive_subset(std::vector<int>& original_ids) const;

private:
    NetworkConfig config_;
    Positions2d positions_;
    Eigen::ArrayXd energies_;
};

/// Uniform random deployment over the field, every node starting with
/// `initial_energy` joules. Positions depend only on `config.seed`.
Deployment generate_deployment(const NetworkConfig& config, double initial_energy);

/// Sum of direct node-to-sink distances over alive nodes.
double total_distance(const Deployment& deployment);

}  // namespace wsnga
