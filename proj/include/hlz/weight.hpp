#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlz/error.hpp"
#include "hlz/interval_set.hpp"

namespace hlz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Integral of |x|^e over (a, b), where a < b lie on the same side of the
/// origin (or e == 0). Bounds may be infinite; divergent integrals return +inf.
inline double power_mass(double a, double b, double e) {
    if (!(a < b)) return 0.0;
    if (e == 0.0) return b - a;
    if (b <= 0.0) return power_mass(-b, -a, e);
    // 0 <= a < b
    const double e1 = e + 1.0;
    if (a == 0.0) {
        if (e1 <= 0.0) return kInf;
        if (std::isinf(b)) return kInf;
        return std::pow(b, e1) / e1;
    }
    if (std::isinf(b)) {
        if (e1 >= 0.0) return kInf;
        return -std::pow(a, e1) / e1;
    }
    const double log_ratio = std::log1p((b - a) / a);
    if (e1 == 0.0) return log_ratio;
    return std::pow(a, e1) * std::expm1(e1 * log_ratio) / e1;
}

enum class Support { RealLine, HalfLine };
enum class WeightKind { Power, Piecewise };

inline std::string_view to_string(Support s) { return s == Support::RealLine ? "real-line" : "half-line"; }
inline std::string_view to_string(WeightKind k) { return k == WeightKind::Power ? "power" : "piecewise"; }

/// Density coef * |x|^expo on (lo, hi). Pieces with expo != 0 never straddle
/// the origin, so every integral over a piece is a single power_mass call.
struct PowerPiece {
    double lo;
    double hi;
    double coef;
    double expo;

    [[nodiscard]] double density(double x) const {
        if (coef == 0.0) return 0.0;
        return expo == 0.0 ? coef : coef * std::pow(std::abs(x), expo);
    }

    /// Integral of density^s * |x|^m over (a, b) ∩ (lo, hi).
    [[nodiscard]] double integral(double a, double b, double s = 1.0, double m = 0.0) const {
        const double l = std::max(lo, a);
        const double h = std::min(hi, b);
        if (!(l < h)) return 0.0;
        if (coef == 0.0) {
            if (s > 0.0) return 0.0;
            if (s < 0.0) return kInf;
        }
        const double c = s == 1.0 ? coef : std::pow(coef, s);
        const double mass = power_mass(l, h, expo * s + m);
        return c == 0.0 ? 0.0 : c * mass;
    }
};

/// A weight: a nonnegative locally integrable density with a closed-form
/// primitive, either on the real line (u) or on the half-line (w).
///
/// Two families are supported.
///  - power: |x|^k on the real line or t^k on (0, inf), with k > -1.
///  - piecewise: constant values between sorted breakpoints, continued past
///    the outermost breakpoints by a power tail. For breakpoints x_1 < ... < x_n
///    and values v_0, ..., v_n, the density is v_i on (x_i, x_{i+1}); on the
///    right tail it is v_n (x / x_n)^e, on the left tail v_0 (x / x_1)^e, where
///    e is the tail exponent. On the half-line v_0 lives on (0, x_1).
class Weight {
public:
    static Weight power(double exponent, Support support) {
        require_domain(std::isfinite(exponent), "Weight: exponent must be finite");
        require_domain(exponent > -1.0, "Weight: power exponent must exceed -1 (local integrability)");
        Weight w;
        w.kind_ = WeightKind::Power;
        w.support_ = support;
        w.exponent_ = exponent;
        if (support == Support::RealLine) w.pieces_.push_back({-kInf, 0.0, 1.0, exponent});
        w.pieces_.push_back({0.0, kInf, 1.0, exponent});
        return w;
    }

    /// |x|^k on the real line.
    static Weight line_power(double k) { return power(k, Support::RealLine); }
    /// t^a on the half-line.
    static Weight half_power(double a) { return power(a, Support::HalfLine); }

    static Weight piecewise(std::vector<double> breakpoints, std::vector<double> values,
                            double tail_exponent, Support support) {
        require_domain(!breakpoints.empty(), "Weight: piecewise weight needs at least one breakpoint");
        require_domain(values.size() == breakpoints.size() + 1,
                       "Weight: piecewise weight needs one more value than breakpoints");
        require_domain(std::isfinite(tail_exponent), "Weight: tail exponent must be finite");
        for (std::size_t i = 0; i < breakpoints.size(); ++i) {
            require_domain(std::isfinite(breakpoints[i]), "Weight: breakpoints must be finite");
            if (i > 0) require_domain(breakpoints[i - 1] < breakpoints[i], "Weight: breakpoints must increase strictly");
        }
        bool any_positive = false;
        for (double v : values) {
            require_domain(std::isfinite(v) && v >= 0.0, "Weight: values must be finite and nonnegative");
            any_positive = any_positive || v > 0.0;
        }
        require_domain(any_positive, "Weight: density vanishes identically");
        const double first = breakpoints.front();
        const double last = breakpoints.back();
        if (support == Support::HalfLine) require_domain(first > 0.0, "Weight: half-line breakpoints must be positive");
        if (tail_exponent != 0.0) {
            require_domain(last > 0.0, "Weight: a power tail needs a positive last breakpoint");
            if (support == Support::RealLine)
                require_domain(first < 0.0, "Weight: a power tail needs a negative first breakpoint");
        }

        Weight w;
        w.kind_ = WeightKind::Piecewise;
        w.support_ = support;
        w.tail_exponent_ = tail_exponent;
        const double e = tail_exponent;
        const std::size_t n = breakpoints.size();
        if (support == Support::RealLine) {
            const double c = e == 0.0 ? values[0] : values[0] * std::pow(std::abs(first), -e);
            w.pieces_.push_back({-kInf, first, c, e});
        } else {
            w.pieces_.push_back({0.0, first, values[0], 0.0});
        }
        for (std::size_t i = 1; i < n; ++i) w.pieces_.push_back({breakpoints[i - 1], breakpoints[i], values[i], 0.0});
        const double c = e == 0.0 ? values[n] : values[n] * std::pow(last, -e);
        w.pieces_.push_back({last, kInf, c, e});
        w.breakpoints_ = std::move(breakpoints);
        w.values_ = std::move(values);
        return w;
    }

    [[nodiscard]] WeightKind kind() const { return kind_; }
    [[nodiscard]] Support support() const { return support_; }
    [[nodiscard]] bool is_power() const { return kind_ == WeightKind::Power; }
    [[nodiscard]] double exponent() const { return exponent_; }
    [[nodiscard]] std::span<const double> breakpoints() const { return breakpoints_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] double tail_exponent() const { return tail_exponent_; }
    [[nodiscard]] std::span<const PowerPiece> pieces() const { return pieces_; }

    /// True for the identity weight (power with exponent 0).
    [[nodiscard]] bool is_unit() const { return is_power() && exponent_ == 0.0; }

    [[nodiscard]] double density(double x) const {
        for (const auto& p : pieces_)
            if (x < p.hi) return x < p.lo ? 0.0 : p.density(x);
        return 0.0;
    }

    /// Integral of the density over (a, b).
    [[nodiscard]] double measure(double a, double b) const { return integral_pow(a, b, 1.0); }

    [[nodiscard]] double measure(const IntervalSet& e) const {
        double m = 0.0;
        for (const auto& iv : e.intervals()) m += measure(iv.a, iv.b);
        return m;
    }

    /// Signed measure of (a, a + o), accurate when o is below the spacing of
    /// doubles near a: the density is then sampled just on the o side of a.
    [[nodiscard]] double measure_from(double a, double o) const {
        if (o == 0.0 || !std::isfinite(a)) return 0.0;
        if (a == 0.0 || std::abs(o) >= 1e-8 * std::abs(a)) return o > 0.0 ? measure(a, a + o) : -measure(a + o, a);
        return o * density(a + std::copysign(1e-9 * std::abs(a), o));
    }

    /// Integral of density^s over (a, b); +inf where density^s is not integrable.
    [[nodiscard]] double integral_pow(double a, double b, double s) const {
        if (!(a < b)) return 0.0;
        if (support_ == Support::HalfLine)
            require_domain(a >= 0.0, "Weight: half-line weight integrated over negative reals");
        double m = 0.0;
        for (const auto& p : pieces_) m += p.integral(a, b, s);
        return m;
    }

    /// Moment integral of t^s w(t) over (a, b) on the half-line.
    [[nodiscard]] double moment(double a, double b, double s) const {
        require_domain(support_ == Support::HalfLine, "Weight::moment: half-line weights only");
        if (!(a < b)) return 0.0;
        require_domain(a >= 0.0, "Weight::moment: negative lower limit");
        double m = 0.0;
        for (const auto& p : pieces_) m += p.integral(a, b, 1.0, s);
        return m;
    }

    /// W(r): integral of w over (0, r).
    [[nodiscard]] double primitive(double r) const {
        require_domain(support_ == Support::HalfLine, "Weight::primitive: half-line weights only");
        require_domain(r >= 0.0, "Weight::primitive: r must be nonnegative");
        return measure(0.0, r);
    }

    /// Total mass over the support.
    [[nodiscard]] double total_mass() const {
        return support_ == Support::HalfLine ? measure(0.0, kInf) : measure(-kInf, kInf);
    }

    [[nodiscard]] bool integrable() const { return std::isfinite(total_mass()); }

    /// Exponent e with density ~ |x|^e as |x| -> inf; -inf when the density
    /// vanishes near infinity on both sides.
    [[nodiscard]] double growth_exponent() const {
        if (is_power()) return exponent_;
        const bool right = pieces_.back().coef > 0.0;
        const bool left = support_ == Support::RealLine && pieces_.front().coef > 0.0;
        return (right || left) ? tail_exponent_ : -kInf;
    }

    /// Exponent a with W(t) ~ t^(a+1) as t -> 0 on the half-line; +inf when W
    /// vanishes on a neighbourhood of the origin.
    [[nodiscard]] double local_exponent_at_zero() const {
        if (is_power()) return exponent_;
        return pieces_.front().coef > 0.0 ? 0.0 : kInf;
    }

    /// Piece boundaries that are finite and inside the support.
    [[nodiscard]] std::vector<double> knots() const {
        std::vector<double> k;
        for (const auto& p : pieces_)
            if (std::isfinite(p.hi)) k.push_back(p.hi);
        return k;
    }

private:
    Weight() = default;

    WeightKind kind_ = WeightKind::Power;
    Support support_ = Support::RealLine;
    double exponent_ = 0.0;
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double tail_exponent_ = 0.0;
    std::vector<PowerPiece> pieces_;
};

/// Nondegeneracy of a (u, w) pair: W(u(R)) > 0.
inline bool nontrivial_pair(const Weight& u, const Weight& w) {
    return w.primitive(std::min(u.total_mass(), 1e300)) > 0.0;
}

} // namespace hlz
