#include "wsnga/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wsnga/error.hpp"

namespace wsnga::svg {

namespace {

std::string fmt(double v) {
    if (std::abs(v) < 5e-4) v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + ' ' + fmt(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_clusters(const Deployment& deployment, const ClusterAssignment& assignment,
                            const ClusterPlotOptions& options) {
    detail::require(assignment.head_of.size() == static_cast<std::size_t>(deployment.size()),
                    "assignment size differs from node count");
    const NetworkConfig& cfg = deployment.config();
    Point2d lo = cfg.field_min().cwiseMin(deployment.sink());
    Point2d hi = cfg.field_max().cwiseMax(deployment.sink());
    lo = lo.cwiseMin(deployment.positions().rowwise().minCoeff());
    hi = hi.cwiseMax(deployment.positions().rowwise().maxCoeff());
    const double span = std::max(hi.x() - lo.x(), hi.y() - lo.y());
    const double margin = 0.05 * span;
    lo.array() -= margin;
    const double scale = options.pixels / (span + 2.0 * margin);
    const double top = options.title.empty() ? 0.0 : 28.0;
    const double height = options.pixels + top;

    // Field y grows upward, SVG y grows downward.
    auto px = [&](double x) { return (x - lo.x()) * scale; };
    auto py = [&](double y) { return top + options.pixels - (y - lo.y()) * scale; };

    std::string out = header(options.pixels, height);
    if (!options.title.empty())
        out += "<text x=\"" + fmt(options.pixels / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" + escape(options.title) + "</text>\n";
    out += "<rect x=\"" + fmt(px(cfg.field_min().x())) + "\" y=\"" + fmt(py(cfg.field_max().y())) + "\" width=\"" +
           fmt(cfg.field_width * scale) + "\" height=\"" + fmt(cfg.field_height * scale) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";

    if (options.connections) {
        out += "<g stroke=\"#9ecae1\" stroke-width=\"0.8\">\n";
        for (int v = 0; v < deployment.size(); ++v) {
            if (!assignment.is_member(v)) continue;
            const int h = assignment.head_of[static_cast<std::size_t>(v)];
            out += "<line x1=\"" + fmt(px(deployment.position(v).x())) + "\" y1=\"" + fmt(py(deployment.position(v).y())) +
                   "\" x2=\"" + fmt(px(deployment.position(h).x())) + "\" y2=\"" + fmt(py(deployment.position(h).y())) +
                   "\"/>\n";
        }
        out += "</g>\n";
    }

    const double member_r = std::max(2.0, options.pixels / 200.0);
    const double head_r = 2.2 * member_r;
    out += "<g id=\"members\" fill=\"#1f5fbf\">\n";
    for (int v = 0; v < deployment.size(); ++v)
        if (assignment.is_member(v))
            out += "<circle cx=\"" + fmt(px(deployment.position(v).x())) + "\" cy=\"" +
                   fmt(py(deployment.position(v).y())) + "\" r=\"" + fmt(member_r) + "\"/>\n";
    out += "</g>\n<g id=\"heads\" fill=\"#ffd21f\" stroke=\"#6b5800\" stroke-width=\"1\">\n";
    for (int h : assignment.head_ids)
        out += "<circle cx=\"" + fmt(px(deployment.position(h).x())) + "\" cy=\"" +
               fmt(py(deployment.position(h).y())) + "\" r=\"" + fmt(head_r) + "\"/>\n";
    out += "</g>\n<g id=\"dead\" stroke=\"#999999\" stroke-width=\"1\">\n";
    for (int v = 0; v < deployment.size(); ++v) {
        if (assignment.head_of[static_cast<std::size_t>(v)] >= 0) continue;
        const double x = px(deployment.position(v).x()), y = py(deployment.position(v).y());
        out += "<path d=\"M" + fmt(x - member_r) + ' ' + fmt(y - member_r) + "L" + fmt(x + member_r) + ' ' +
               fmt(y + member_r) + "M" + fmt(x - member_r) + ' ' + fmt(y + member_r) + "L" + fmt(x + member_r) + ' ' +
               fmt(y - member_r) + "\"/>\n";
    }
    out += "</g>\n";
    const double s = 2.5 * member_r;
    out += "<rect id=\"sink\" x=\"" + fmt(px(deployment.sink().x()) - s) + "\" y=\"" + fmt(py(deployment.sink().y()) - s) +
           "\" width=\"" + fmt(2 * s) + "\" height=\"" + fmt(2 * s) + "\" fill=\"black\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string render_line_chart(const std::vector<Series>& series, const ChartOptions& options) {
    detail::require(!series.empty(), "line chart needs at least one series");
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const Series& s : series) {
        detail::require(s.x.size() == s.y.size(), "series '" + s.label + "' has mismatched x/y lengths");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    }
    if (!std::isfinite(x0)) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    if (x1 == x0) x1 = x0 + 1.0;
    if (y1 == y0) {
        const double pad = y0 == 0.0 ? 1.0 : 0.05 * std::abs(y0);
        y0 -= pad;
        y1 += pad;
    }

    const double left = 80.0, right = 20.0, top = 40.0, bottom = 56.0;
    const double pw = options.width - left - right, ph = options.height - top - bottom;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

    std::string out = header(options.width, options.height);
    out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<text x=\"" + fmt(options.width / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
           escape(options.title) + "</text>\n";
    out += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = x0 + (x1 - x0) * t / 4.0, yv = y0 + (y1 - y0) * t / 4.0;
        out += "<line x1=\"" + fmt(px(xv)) + "\" y1=\"" + fmt(top + ph) + "\" x2=\"" + fmt(px(xv)) + "\" y2=\"" +
               fmt(top + ph + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(px(xv)) + "\" y=\"" + fmt(top + ph + 19) + "\" text-anchor=\"middle\">" +
               tick_label(xv) + "</text>\n";
        out += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + fmt(py(yv)) + "\" x2=\"" + fmt(left) + "\" y2=\"" +
               fmt(py(yv)) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(left - 8) + "\" y=\"" + fmt(py(yv) + 4) + "\" text-anchor=\"end\">" +
               tick_label(yv) + "</text>\n";
    }
    out += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(options.height - 12) + "\" text-anchor=\"middle\">" +
           escape(options.x_label) + "</text>\n";
    out += "<text transform=\"translate(16 " + fmt(top + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
           escape(options.y_label) + "</text>\n</g>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series& s = series[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!points.empty()) points += ' ';
            points += fmt(px(s.x[i])) + ',' + fmt(py(s.y[i]));
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.8\" points=\"" +
               points + "\"/>\n";
        const double ly = top + 16.0 + 16.0 * static_cast<double>(k);
        out += "<line x1=\"" + fmt(left + pw - 150) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(left + pw - 126) +
               "\" y2=\"" + fmt(ly) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(left + pw - 120) + "\" y=\"" + fmt(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace wsnga::svg
