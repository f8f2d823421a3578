#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hlz/detail/numerics.hpp"
#include "hlz/interval_set.hpp"

namespace hlz {

/// Log-spaced axis described by its range and point count.
struct LogAxis {
    double lo;
    double hi;
    std::size_t points;

    [[nodiscard]] std::vector<double> values() const { return detail::log_grid(lo, hi, points); }

    /// Same range, twice the density.
    [[nodiscard]] LogAxis refined() const { return {lo, hi, 2 * points - 1}; }

    /// Range widened by `factor` at both ends, same spacing per decade.
    [[nodiscard]] LogAxis extended(double factor) const {
        const double decades = std::log10(hi / lo);
        const double per_decade = points > 1 ? static_cast<double>(points - 1) / decades : 1.0;
        const auto extra = static_cast<std::size_t>(std::lround(per_decade * std::log10(factor)));
        return {lo / factor, hi * factor, points + 2 * extra};
    }

    /// Range widened only downwards (used for fractions, which stop at 1).
    [[nodiscard]] LogAxis extended_down(double factor) const {
        const double decades = std::log10(hi / lo);
        const double per_decade = points > 1 ? static_cast<double>(points - 1) / decades : 1.0;
        const auto extra = static_cast<std::size_t>(std::lround(per_decade * std::log10(factor)));
        return {lo / factor, hi, points + extra};
    }
};

/// Search grids shared by the weight-class certifiers.
struct SearchConfig {
    LogAxis scales{1e-4, 1e4, 33};
    std::vector<double> centers{0.0, 1.0, -1.0, 10.0, -10.0};
    LogAxis fractions{1e-4, 1.0, 33};
    LogAxis lambdas{1e-3, 1e2, 50};
    double tolerance = 1e-9;

    [[nodiscard]] SearchConfig refined() const {
        SearchConfig c = *this;
        c.scales = scales.refined();
        c.fractions = fractions.refined();
        c.lambdas = lambdas.refined();
        return c;
    }

    [[nodiscard]] SearchConfig extended(double factor = 100.0) const {
        SearchConfig c = *this;
        c.scales = scales.extended(factor);
        c.fractions = fractions.extended_down(factor);
        return c;
    }
};

/// Intervals searched by the certifiers: for every center c and scale s the
/// centered interval (c - s, c + s) and the one-sided (c, c + 2s), (c - 2s, c).
inline std::vector<Interval> interval_grid(const SearchConfig& cfg) {
    std::vector<Interval> out;
    for (double c : cfg.centers)
        for (double s : cfg.scales.values()) {
            out.push_back({c - s, c + s});
            out.push_back({c, c + 2.0 * s});
            out.push_back({c - 2.0 * s, c});
        }
    return out;
}

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string format_interval(const Interval& iv) {
    return "(" + format_number(iv.a) + ", " + format_number(iv.b) + ")";
}

} // namespace hlz
