#include "wsnga/network.hpp"

#include <cmath>
#include <string>

#include "wsnga/error.hpp"
#include "wsnga/rng.hpp"

namespace wsnga {

using detail::require;

void NetworkConfig::validate() const {
    require(node_count >= 2, "node_count must be at least 2");
    require(std::isfinite(field_width) && field_width > 0.0, "field_width must be positive");
    require(std::isfinite(field_height) && field_height > 0.0, "field_height must be positive");
    require(sink_position.allFinite(), "sink_position must be finite");
    require(packet_bits > 0, "packet_bits must be positive");
}

Deployment::Deployment(NetworkConfig config, Positions2d positions, Eigen::ArrayXd energies)
    : config_(std::move(config)), positions_(std::move(positions)), energies_(std::move(energies)) {
    require(positions_.cols() >= 1, "deployment needs at least one node");
    require(positions_.cols() == energies_.size(), "positions and energies differ in length");
    require(positions_.allFinite(), "node positions must be finite");
    require((energies_ >= 0.0).all() && energies_.allFinite(),
            "residual energies must be finite and non-negative");
    require(config_.packet_bits > 0, "packet_bits must be positive");
    config_.node_count = static_cast<int>(positions_.cols());
}

Node Deployment::node(int id) const {
    require(id >= 0 && id < size(), "node id out of range: " + std::to_string(id));
    return Node{id, positions_.col(id), energies_(id), energies_(id) > 0.0};
}

std::vector<Node> Deployment::nodes() const {
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out.push_back(node(i));
    return out;
}

Deployment Deployment::with_energies(Eigen::ArrayXd energies) const {
    return Deployment(config_, positions_, std::move(energies));
}

Deployment Deployment::alive_subset(std::vector<int>& original_ids) const {
    original_ids.clear();
    for (int i = 0; i < size(); ++i)
        if (alive(i)) original_ids.push_back(i);
    require(!original_ids.empty(), "no alive nodes");
    const auto k = static_cast<Eigen::Index>(original_ids.size());
    Positions2d pos(2, k);
    Eigen::ArrayXd energy(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        pos.col(j) = positions_.col(original_ids[static_cast<std::size_t>(j)]);
        energy(j) = energies_(original_ids[static_cast<std::size_t>(j)]);
    }
    return Deployment(config_, std::move(pos), std::move(energy));
}

Deployment generate_deployment(const NetworkConfig& config, double initial_energy) {
    config.validate();
    require(std::isfinite(initial_energy) && initial_energy > 0.0,
            "initial node energy must be positive");
    Rng rng(config.seed, Stream::Deployment);
    const Point2d lo = config.field_min();
    const Point2d hi = config.field_max();
    Positions2d pos(2, config.node_count);
    for (int i = 0; i < config.node_count; ++i) {
        pos(0, i) = rng.uniform(lo.x(), hi.x());
        pos(1, i) = rng.uniform(lo.y(), hi.y());
    }
    return Deployment(config, std::move(pos), Eigen::ArrayXd::Constant(config.node_count, initial_energy));
}

double total_distance(const Deployment& deployment) {
    const Eigen::VectorXd d = deployment.sink_distances();
    double sum = 0.0;
    for (int i = 0; i < deployment.size(); ++i)
        if (deployment.alive(i)) sum += d(i);
    return sum;
}

}  // namespace wsnga
