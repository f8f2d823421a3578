#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

#include "hlz/detail/numerics.hpp"
#include "hlz/foundations.hpp"
#include "hlz/rearrangement.hpp"

namespace hlz {

enum class NormFamily { LambdaStrong, LambdaWeak, GammaStrong, GammaWeak, Associate };

inline std::string_view to_string(NormFamily f) {
    switch (f) {
        case NormFamily::LambdaStrong: return "lambda-strong";
        case NormFamily::LambdaWeak: return "lambda-weak";
        case NormFamily::GammaStrong: return "gamma-strong";
        case NormFamily::GammaWeak: return "gamma-weak";
        case NormFamily::Associate: return "associate";
    }
    return "lambda-strong";
}

struct NormKind {
    NormFamily family = NormFamily::LambdaStrong;
    double p = 1.0;
};

inline constexpr double kGammaQuadratureTol = 1e-8;

namespace detail {

inline void require_lorentz_inputs(const Weight& u, const Weight& w, double p) {
    require_domain(p > 0.0 && std::isfinite(p), "Lorentz norm: p must be positive");
    require_domain(u.support() == Support::RealLine, "Lorentz norm: u must be a real-line weight");
    require_domain(w.support() == Support::HalfLine, "Lorentz norm: w must be a half-line weight");
}

/// Sorted breakpoints of g and w on (0, inf): between two consecutive cuts
/// both the primitive of g and the density of w have a single closed form.
inline std::vector<double> panel_cuts(const StepDecreasing& g, const Weight& w) {
    std::vector<double> cuts(g.knots().begin() + 1, g.knots().end());
    for (double k : w.knots())
        if (k > 0.0) cuts.push_back(k);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

/// sup over t > 0 of G(t) t^a W(t)^b, with G(t) = integral of g over (0, t).
///
/// Interior maxima are located per panel with a coarse log-scan followed by
/// Brent refinement; the behaviour at 0 and at infinity is decided from the
/// local power exponents, so divergent suprema come back as +inf.
inline double sup_primitive_ratio(const StepDecreasing& g, const Weight& w, double a, double b) {
    if (g.is_zero()) return 0.0;
    auto h = [&](double t) {
        const double W = w.primitive(t);
        const double val = g.integral(t) * std::pow(t, a);
        if (W == 0.0) return b > 0.0 ? 0.0 : (b == 0.0 ? val : kInf);
        return val * std::pow(W, b);
    };

    // Near 0, G ~ v_1 t and W ~ c t^(ell).
    const double ell0 = w.local_exponent_at_zero() + 1.0;
    const double e0 = std::isinf(ell0) ? (b < 0.0 ? -kInf : kInf) : 1.0 + a + b * ell0;
    if (e0 < 0.0) return kInf;
    // Near infinity, G = C and W ~ t^(ell) (or bounded).
    const double grow = w.growth_exponent();
    const double ellinf = grow > -1.0 ? grow + 1.0 : 0.0;
    const double einf = a + b * ellinf;
    if (einf > 0.0) return kInf;

    const auto cuts = panel_cuts(g, w);
    double best = 0.0;
    auto scan = [&](double lo, double hi) {
        const int n = 12;
        double arg = lo;
        double val = -1.0;
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i <= n; ++i) {
            const double t = std::exp(llo + (lhi - llo) * i / n);
            const double v = h(std::clamp(t, lo, hi));
            if (v > val) { val = v; arg = std::log(std::clamp(t, lo, hi)); }
        }
        best = std::max(best, val);
        const double step = (lhi - llo) / n;
        const double l = std::max(llo, arg - step), r = std::min(lhi, arg + step);
        if (l < r) {
            const auto [x, v] = maximize([&](double s) { return h(std::exp(s)); }, l, r);
            best = std::max(best, v);
        }
    };
    scan(cuts.front() * 1e-12, cuts.front());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) scan(cuts[i], cuts[i + 1]);
    scan(cuts.back(), cuts.back() * 1e12);
    return best;
}

} // namespace detail

inline double lambda_norm(const SimpleFunction& f, const Weight& u, const Weight& w, double p) {
    detail::require_lorentz_inputs(u, w, p);
    return std::pow(decreasing_rearrangement(f, u).power_integral(w, p), 1.0 / p);
}

/// sup_t W(t)^(1/p) f*_u(t), attained at the right ends of the steps.
inline double weak_lambda_norm(const SimpleFunction& f, const Weight& u, const Weight& w, double p) {
    detail::require_lorentz_inputs(u, w, p);
    const auto g = decreasing_rearrangement(f, u);
    double best = 0.0;
    for (std::size_t i = 0; i < g.steps(); ++i)
        best = std::max(best, std::pow(w.primitive(g.knots()[i + 1]), 1.0 / p) * g.levels()[i]);
    return best;
}

/// Weak norm of a step-decreasing function given directly.
inline double weak_lambda_norm(const StepDecreasing& g, const Weight& w, double p) {
    double best = 0.0;
    for (std::size_t i = 0; i < g.steps(); ++i)
        best = std::max(best, std::pow(w.primitive(g.knots()[i + 1]), 1.0 / p) * g.levels()[i]);
    return best;
}

/// (integral of (f**_u)^p w)^(1/p); +inf when the tail C/t is not p-integrable
/// against w.
inline double gamma_norm(const SimpleFunction& f, const Weight& u, const Weight& w, double p) {
    detail::require_lorentz_inputs(u, w, p);
    const auto g = decreasing_rearrangement(f, u);
    if (g.is_zero()) return 0.0;
    const auto k = g.knots();
    const auto v = g.levels();
    const double total = g.integral();
    const double tail = w.moment(g.end(), kInf, -p);
    if (!std::isfinite(tail)) return kInf;
    double s = std::pow(v[0], p) * w.primitive(k[1]) + std::pow(total, p) * tail;
    auto cuts = detail::panel_cuts(g, w);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (lo < k[1] || lo >= g.end()) continue;
        const double mid = 0.5 * (lo + hi);
        auto it = std::upper_bound(k.begin(), k.end(), mid);
        const std::size_t step = static_cast<std::size_t>(it - k.begin()) - 1;
        const double level = v[step];
        const double d = g.integral(k[step]) - level * k[step];
        s += detail::integrate(
            [&](double t) { return std::pow(level + d / t, p) * w.density(t); }, lo, hi, kGammaQuadratureTol * 1e-2);
    }
    return std::pow(s, 1.0 / p);
}

/// sup_t W(t)^(1/p) f**_u(t).
inline double gamma_weak_norm(const SimpleFunction& f, const Weight& u, const Weight& w, double p) {
    detail::require_lorentz_inputs(u, w, p);
    return detail::sup_primitive_ratio(decreasing_rearrangement(f, u), w, -1.0, 1.0 / p);
}

/// Norm of g in the associate space of Lambda^p_u(w).
///
/// p <= 1: sup_t (integral of g*_u over (0, t)) / W(t)^(1/p).
/// p > 1:  (integral of (G(t) / W(t))^p' w(t) dt)^(1/p'), G the primitive of
///         g*_u; this is the Gamma^p'_u(v) norm with v = t^p' W^-p' w written
///         without the t^p' t^-p' cancellation. Requires w not integrable.
///         Equivalent to the dual norm up to constants; for 1 < p < 2 the
///         pairing can exceed the product of norms by a bounded factor.
inline double associate_norm(const SimpleFunction& gf, const Weight& u, const Weight& w, double p) {
    detail::require_lorentz_inputs(u, w, p);
    const auto g = decreasing_rearrangement(gf, u);
    if (p <= 1.0) return detail::sup_primitive_ratio(g, w, 0.0, -1.0 / p);
    if (w.integrable())
        throw UnsupportedInputError("associate_norm: p > 1 requires a non-integrable w");
    if (g.is_zero()) return 0.0;
    const double q = p / (p - 1.0);
    const double total = g.integral();
    // Tail: C^q * integral of W^-q dW from W(T) to inf.
    double s = std::pow(total, q) * std::pow(w.primitive(g.end()), 1.0 - q) / (q - 1.0);
    auto integrand = [&](double t) {
        const double W = w.primitive(t);
        if (W == 0.0) return g.integral(t) > 0.0 ? kInf : 0.0;
        return std::pow(g.integral(t) / W, q) * w.density(t);
    };
    const auto cuts = detail::panel_cuts(g, w);
    s += detail::integrate_from_zero(integrand, cuts.front(), kGammaQuadratureTol * 1e-2);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] >= g.end()) break;
        s += detail::integrate(integrand, cuts[i], cuts[i + 1], kGammaQuadratureTol * 1e-2);
    }
    return std::pow(s, 1.0 / q);
}

inline double norm(const NormKind& kind, const SimpleFunction& f, const Weight& u, const Weight& w) {
    switch (kind.family) {
        case NormFamily::LambdaStrong: return lambda_norm(f, u, w, kind.p);
        case NormFamily::LambdaWeak: return weak_lambda_norm(f, u, w, kind.p);
        case NormFamily::GammaStrong: return gamma_norm(f, u, w, kind.p);
        case NormFamily::GammaWeak: return gamma_weak_norm(f, u, w, kind.p);
        case NormFamily::Associate: return associate_norm(f, u, w, kind.p);
    }
    return 0.0;
}

} // namespace hlz
