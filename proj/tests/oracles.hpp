// Independent numerical oracles shared by the tests. Nothing here calls the
// library's quadrature or closed forms.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hlz/hlz.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

inline double simpson_rec(const Fn& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson with absolute tolerance.
inline double simpson(const Fn& f, double a, double b, double tol = 1e-12, int depth = 40) {
    if (!(a < b)) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Romberg integration with `levels` halvings.
inline double romberg(const Fn& f, double a, double b, int levels = 14) {
    std::vector<double> prev(1), cur;
    double h = b - a;
    prev[0] = 0.5 * h * (f(a) + f(b));
    for (int k = 1; k < levels; ++k) {
        h *= 0.5;
        double s = 0.0;
        const long n = 1L << (k - 1);
        for (long i = 0; i < n; ++i) s += f(a + (2 * i + 1) * h);
        cur.assign(k + 1, 0.0);
        cur[0] = 0.5 * prev[0] + h * s;
        double pw = 1.0;
        for (int j = 1; j <= k; ++j) {
            pw *= 4.0;
            cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pw - 1.0);
        }
        prev = cur;
    }
    return prev.back();
}

/// Integral over (a, b) of an integrand singular like log or a power at
/// `singular` (either end), on panels graded geometrically towards it.
inline double graded(const Fn& f, double a, double b, bool singular_at_a, int panels = 60, int levels = 10) {
    double s = 0.0;
    const double len = b - a;
    for (int j = 0; j < panels; ++j) {
        const double o1 = len * std::ldexp(1.0, -j - 1), o2 = len * std::ldexp(1.0, -j);
        if (singular_at_a) s += romberg(f, a + o1, a + o2, levels);
        else s += romberg(f, b - o2, b - o1, levels);
    }
    return s;
}

/// Principal value (1/pi) p.v. integral of f(y) / (x - y) for a simple f, by
/// quadrature on the complement of (x - eps, x + eps) with shrinking eps
/// until two successive values agree.
inline double hilbert_pv(const hlz::SimpleFunction& f, double x) {
    auto truncated = [&](double eps) {
        double s = 0.0;
        for (const auto& seg : f.segments()) {
            auto kern = [&](double y) { return seg.value / (x - y); };
            const double l1 = seg.a, h1 = std::min(seg.b, x - eps);
            if (l1 < h1) s += graded(kern, l1, h1, false);
            const double l2 = std::max(seg.a, x + eps), h2 = seg.b;
            if (l2 < h2) s += graded(kern, l2, h2, true);
        }
        return s / std::numbers::pi;
    };
    double eps = 1e-2;
    double prev = truncated(eps);
    for (int k = 0; k < 30; ++k) {
        eps *= 0.25;
        const double cur = truncated(eps);
        if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// u({|f| > lambda}) straight from the definition.
inline double distribution(const hlz::SimpleFunction& f, const hlz::Weight& u, double lambda) {
    double s = 0.0;
    for (const auto& seg : f.segments())
        if (std::abs(seg.value) > lambda) s += u.measure(seg.a, seg.b);
    return s;
}

/// f*_u(t) = inf{lambda : u({|f| > lambda}) <= t}, searching the value set.
inline double rearrangement(const hlz::SimpleFunction& f, const hlz::Weight& u, double t) {
    std::vector<double> levels{0.0};
    for (const auto& seg : f.segments()) levels.push_back(std::abs(seg.value));
    std::sort(levels.begin(), levels.end());
    for (double l : levels)
        if (distribution(f, u, l) <= t) return l;
    return levels.back();
}

/// Integral of |x|^e over (a, b) by Simpson in a variable that removes the
/// singularity at 0.
inline double power_integral(double a, double b, double e) {
    auto piece = [&](double lo, double hi) {
        // lo >= 0; substitute x = s^m with m chosen so the integrand is smooth.
        const double m = e < 0 ? 2.0 / (e + 1.0) : 1.0;
        auto g = [&](double s) { return s <= 0 ? 0.0 : m * std::pow(s, m * (e + 1.0) - 1.0); };
        return simpson(g, std::pow(lo, 1.0 / m), std::pow(hi, 1.0 / m), 1e-14);
    };
    if (a >= 0) return piece(a, b);
    if (b <= 0) return piece(-b, -a);
    return piece(0, -a) + piece(0, b);
}

/// Random simple function with up to `max_pieces` pieces, including adjacent
/// pieces and repeated values.
inline hlz::SimpleFunction random_function(hlz::detail::Rng& rng, int max_pieces = 8, double span = 16.0) {
    for (;;) {
        const int n = rng.integer(1, max_pieces);
        std::vector<double> pts;
        for (int i = 0; i <= n; ++i) pts.push_back(std::round(rng.uniform(-span, span) * 64.0) / 64.0);
        std::sort(pts.begin(), pts.end());
        std::vector<hlz::Segment> segs;
        const double values[] = {-3.0, -1.5, -1.0, 0.5, 1.0, 2.0, 2.5, 4.0};
        for (int i = 0; i < n; ++i) {
            if (!(pts[i] < pts[i + 1]) || rng.integer(0, 4) == 0) continue;
            const double v = rng.integer(0, 2) == 0 ? values[rng.integer(0, 7)] : rng.uniform(-4.0, 4.0);
            segs.push_back({pts[i], pts[i + 1], v});
        }
        auto f = hlz::SimpleFunction::from_segments(std::move(segs));
        if (!f.is_zero()) return f;
    }
}

/// The three u families used across the tests.
inline std::vector<hlz::Weight> u_families() {
    return {hlz::Weight::line_power(0.0), hlz::Weight::line_power(0.6),
            hlz::Weight::piecewise({-1.0, 0.5, 2.0}, {0.5, 2.0, 1.0, 3.0}, 0.3, hlz::Support::RealLine)};
}

inline double rel_err(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

} // namespace oracle
