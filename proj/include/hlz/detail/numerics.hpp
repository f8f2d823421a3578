#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hlz/error.hpp"

namespace hlz::detail {

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    require_domain(lo > 0.0 && hi >= lo && n > 0, "log_grid: need 0 < lo <= hi and n > 0");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log10(lo);
    const double step = (std::log10(hi) - llo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = std::pow(10.0, llo + step * static_cast<double>(i));
    g.back() = hi;
    return g;
}

/// Adaptive Gauss-Kronrod on a finite interval.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol) {
    if (!(a < b)) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, rel_tol, &err);
}

/// Integral over (0, upper) of an integrand that may be singular at 0.
///
/// The range is cut into dyadic shells (upper 2^-(j+1), upper 2^-j). A
/// power-type singularity t^-g gives shell contributions in the fixed ratio
/// 2^(g-1): a ratio >= 1 means divergence (+inf), a ratio < 1 lets the rest
/// of the series be summed geometrically.
template <class F>
double integrate_from_zero(F&& f, double upper, double rel_tol) {
    if (!(upper > 0.0)) return 0.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    double total = 0.0;
    double prev = 0.0;
    std::vector<double> ratios;
    double hi = upper;
    for (int j = 0; j < 400; ++j) {
        const double lo = 0.5 * hi;
        const double c = integrate(f, lo, hi, rel_tol);
        if (!std::isfinite(c)) return inf;
        total += c;
        hi = lo;
        if (prev > 0.0 && c > 0.0) {
            ratios.push_back(c / prev);
            const std::size_t n = ratios.size();
            if (n >= 4) {
                const double r = ratios[n - 1];
                bool stable = true;
                for (std::size_t k = n - 4; k < n - 1; ++k) stable = stable && std::abs(ratios[k] - r) <= 1e-4 * r;
                if (stable) {
                    if (r >= 1.0 - 1e-9) return inf;
                    total += c * r / (1.0 - r);
                    break;
                }
            }
        }
        if (j > 4 && c <= 1e-16 * total) break;
        prev = c;
        if (hi < 1e-300) break;
    }
    // Shell masses that keep growing without settling still mean divergence.
    if (ratios.size() >= 20 && std::all_of(ratios.end() - 20, ratios.end(), [](double r) { return r > 1.0; }))
        return inf;
    return total;
}

/// Maximum of f on [a, b] (local, via Brent); returns {argmax, value}.
template <class F>
std::pair<double, double> maximize(F&& f, double a, double b) {
    auto neg = [&](double x) { return -f(x); };
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::brent_find_minima(neg, a, b, 50, iters);
    return {r.first, -r.second};
}

/// Largest x in [lo, hi] with pred(x) true, for pred monotone true -> false.
template <class P>
double bisect_last_true(P&& pred, double lo, double hi, int iters = 100) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (pred(mid)) lo = mid; else hi = mid;
    }
    return lo;
}

/// Deterministic 64-bit generator (splitmix64) with portable real mapping,
/// so random test families are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::uint64_t state_;
};

} // namespace hlz::detail
