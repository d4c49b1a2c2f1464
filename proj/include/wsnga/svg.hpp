#pragma once

#include <string>
#include <vector>

#include "wsnga/clustering.hpp"
#include "wsnga/network.hpp"

namespace wsnga::svg {

struct ClusterPlotOptions {
    double pixels = 640.0;
    /// Draw a line from each member to its head.
    bool connections = false;
    std::string title;
};

/// Field scatter: the sink as a filled black square at its coordinates,
/// members as small blue circles, heads as larger yellow circles. Dead
/// nodes are drawn as grey crosses.
std::string render_clusters(const Deployment& deployment, const ClusterAssignment& assignment,
                            const ClusterPlotOptions& options = {});

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    double width = 720.0;
    double height = 440.0;
};

/// Static line chart with linear axes, five ticks per axis and a legend.
std::string render_line_chart(const std::vector<Series>& series, const ChartOptions& options);

}  // namespace wsnga::svg
