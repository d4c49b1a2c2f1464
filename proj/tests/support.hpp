#pragma once

#include <initializer_list>
#include <utility>

#include "wsnga/network.hpp"

namespace wsnga::testing {

inline Deployment make_deployment(std::initializer_list<std::pair<double, double>> points, double energy = 0.5,
                                  Point2d sink = Point2d::Zero()) {
    Positions2d pos(2, static_cast<Eigen::Index>(points.size()));
    Eigen::Index i = 0;
    for (const auto& [x, y] : points) pos.col(i++) << x, y;
    NetworkConfig cfg;
    cfg.sink_position = sink;
    return Deployment(cfg, pos, Eigen::ArrayXd::Constant(pos.cols(), energy));
}

inline Deployment seeded(int n, std::uint64_t seed, double energy = 0.5) {
    NetworkConfig cfg;
    cfg.node_count = n;
    cfg.seed = seed;
    const Deployment d = generate_deployment(cfg, 1.0);
    return d.with_energies(Eigen::ArrayXd::Constant(n, energy));
}

}  // namespace wsnga::testing
