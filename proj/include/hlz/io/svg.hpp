#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hlz/error.hpp"

namespace hlz::io {

/// Writes `content` to `path` through a temporary file and a rename.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UnsupportedInputError("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw UnsupportedInputError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Polyline plot with log-scaled axes. Nonpositive or infinite points are
/// skipped.
inline std::string svg_plot(const std::vector<Series>& series, const std::string& title, const std::string& xlabel,
                            const std::string& ylabel) {
    const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!(s.x[i] > 0 && s.y[i] > 0) || !std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, std::log10(s.x[i]));
            xmax = std::max(xmax, std::log10(s.x[i]));
            ymin = std::min(ymin, std::log10(s.y[i]));
            ymax = std::max(ymax, std::log10(s.y[i]));
        }
    if (!(xmin <= xmax)) xmin = 0, xmax = 1;
    if (!(ymin <= ymax)) ymin = 0, ymax = 1;
    if (xmax - xmin < 1e-9) xmin -= 0.5, xmax += 0.5;
    if (ymax - ymin < 1e-9) ymin -= 0.5, ymax += 0.5;
    auto px = [&](double v) { return L + (std::log10(v) - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double v) { return H - B - (std::log10(v) - ymin) / (ymax - ymin) * (H - T - B); };

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" font-family=\"sans-serif\" "
                  "font-size=\"12\">\n",
                  W, H);
    out += buf;
    std::snprintf(buf, sizeof buf, "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" stroke=\"#444\"/>\n",
                  L, T, W - L - R, H - T - B);
    out += buf;
    out += "<text x=\"" + std::to_string(static_cast<int>(W / 2)) + "\" y=\"24\" text-anchor=\"middle\">" + title +
           "</text>\n";
    // Decade ticks.
    for (int d = static_cast<int>(std::ceil(xmin)); d <= static_cast<int>(std::floor(xmax)); ++d) {
        const double x = px(std::pow(10.0, d));
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.0f\" x2=\"%.1f\" y2=\"%.0f\" stroke=\"#ccc\"/><text x=\"%.1f\" y=\"%.0f\" "
                      "text-anchor=\"middle\">1e%d</text>\n",
                      x, T, x, H - B, x, H - B + 16, d);
        out += buf;
    }
    for (int d = static_cast<int>(std::ceil(ymin)); d <= static_cast<int>(std::floor(ymax)); ++d) {
        const double y = py(std::pow(10.0, d));
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.0f\" y1=\"%.1f\" x2=\"%.0f\" y2=\"%.1f\" stroke=\"#ccc\"/><text x=\"%.0f\" y=\"%.1f\" "
                      "text-anchor=\"end\">1e%d</text>\n",
                      L, y, W - R, y, L - 6, y + 4, d);
        out += buf;
    }
    out += "<text x=\"" + std::to_string(static_cast<int>(W / 2)) + "\" y=\"" + std::to_string(static_cast<int>(H - 12)) +
           "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
    out += "<text x=\"16\" y=\"" + std::to_string(static_cast<int>(H / 2)) + "\" transform=\"rotate(-90 16 " +
           std::to_string(static_cast<int>(H / 2)) + ")\" text-anchor=\"middle\">" + ylabel + "</text>\n";
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        std::string pts;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!(s.x[i] > 0 && s.y[i] > 0) || !std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
            pts += buf;
        }
        out += "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" + std::string(colors[k % 5]) + "\" points=\"" +
               pts + "\"/>\n";
        std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" fill=\"%s\">", W - R - 150, T + 16 + 14.0 * k,
                      colors[k % 5]);
        out += buf + s.label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace hlz::io
