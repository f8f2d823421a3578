#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hlz/foundations.hpp"

namespace hlz {

/// Hf(x) = (1/pi) sum over segments of value * log(|x - a| / |x - b|).
inline double hilbert_exact(const SimpleFunction& f, double x) {
    if (f.is_endpoint(x))
        throw SingularPointError("hilbert_exact: x = " + std::to_string(x) + " is a jump point of f");
    double s = 0.0;
    for (const auto& seg : f.segments()) s += seg.value * std::log(std::abs(x - seg.a) / std::abs(x - seg.b));
    return s / std::numbers::pi;
}

/// (1/pi) * integral over |x - y| > eps of f(y) / (x - y) dy.
inline double hilbert_truncated(const SimpleFunction& f, double x, double eps) {
    require_domain(eps > 0.0, "hilbert_truncated: eps must be positive");
    double s = 0.0;
    for (const auto& seg : f.segments()) {
        // Parts of (a, b) outside (x - eps, x + eps); x is never inside them.
        const double l1 = seg.a, h1 = std::min(seg.b, x - eps);
        if (l1 < h1) s += seg.value * std::log((x - l1) / (x - h1));
        const double l2 = std::max(seg.a, x + eps), h2 = seg.b;
        if (l2 < h2) s += seg.value * std::log((l2 - x) / (h2 - x));
    }
    return s / std::numbers::pi;
}

/// H*f(x) = sup over eps > 0 of |H_eps f(x)|, computed exactly.
///
/// Between consecutive distances from x to the jump points, f(x + eps) and
/// f(x - eps) are constant, so H_eps f(x) is affine in log(eps) and its
/// modulus peaks at a panel boundary. The candidates are those distances,
/// eps -> 0+ (giving |Hf(x)|) and eps -> inf (giving 0).
inline double hilbert_maximal(const SimpleFunction& f, double x) {
    double best = std::abs(hilbert_exact(f, x));
    for (double e : f.endpoints()) best = std::max(best, std::abs(hilbert_truncated(f, x, std::abs(x - e))));
    return best;
}

/// Closed-form superlevel set {x : |H chi_(a,b)(x)| > lambda}.
struct LevelSetClosedForm {
    double a;
    double b;
    double lambda;
    double phi;
    double psi;
    IntervalSet pieces;
};

inline LevelSetClosedForm level_set_closed_form(double a, double b, double lambda) {
    require_domain(a < b, "level_set: need a < b");
    require_domain(lambda > 0.0, "level_set: lambda must be positive");
    const double len = b - a;
    const double ex = std::exp(std::numbers::pi * lambda);
    const double phi = len / (1.0 + ex);
    const double psi = len / std::expm1(std::numbers::pi * lambda);
    return {a, b, lambda, phi, psi, IntervalSet({{a - psi, a + phi}, {b - phi, b + psi}})};
}

/// u({x : |H chi_(a,b)(x)| > lambda}).
/// Measured from offsets around a and b, so large lambda keeps full relative
/// accuracy after the pieces shrink below double spacing.
inline double level_set_single_interval(double a, double b, double lambda, const Weight& u) {
    const auto cf = level_set_closed_form(a, b, lambda);
    return u.measure_from(a, cf.phi) - u.measure_from(a, -cf.psi) + u.measure_from(b, cf.psi) -
           u.measure_from(b, -cf.phi);
}

/// Mf(x): sup of the averages of |f| over intervals containing x.
///
/// With one endpoint fixed, the average is monotone while the other endpoint
/// moves between jump points, so both endpoints can be taken from the jump
/// points together with x itself (limits included).
inline double hl_maximal(const SimpleFunction& f, double x) {
    const auto af = f.abs();
    const auto e = af.endpoints();
    std::vector<double> left{x}, right{x};
    for (double p : e) {
        if (p < x) left.push_back(p);
        if (p > x) right.push_back(p);
    }
    auto mass = [&](double lo, double hi) {
        double m = 0.0;
        for (const auto& s : af.segments()) {
            const double l = std::max(lo, s.a), h = std::min(hi, s.b);
            if (l < h) m += s.value * (h - l);
        }
        return m;
    };
    // Shrinking intervals: one-sided limits of |f| at x.
    double best = std::max(af.value_at(x), 0.0);
    for (const auto& s : af.segments())
        if (s.a == x || s.b == x) best = std::max(best, s.value);
    for (double l : left)
        for (double r : right)
            if (l < r) best = std::max(best, mass(l, r) / (r - l));
    return best;
}

} // namespace hlz
