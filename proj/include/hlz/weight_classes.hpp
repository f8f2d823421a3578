#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hlz/detail/numerics.hpp"
#include "hlz/foundations.hpp"
#include "hlz/search_config.hpp"

namespace hlz {

namespace detail {

/// Running supremum with its witness; ties keep the earliest candidate.
struct Sup {
    double value = 0.0;
    std::string witness;
    bool seen = false;

    template <class W>
    void offer(double v, W&& describe) {
        if (std::isnan(v)) return;
        if (!seen || v > value) {
            value = v;
            witness = describe();
            seen = true;
        }
    }
};

inline void require_line(const Weight& u, const char* who) {
    require_domain(u.support() == Support::RealLine, std::string(who) + ": u must be a real-line weight");
}

inline void require_half(const Weight& w, const char* who) {
    require_domain(w.support() == Support::HalfLine, std::string(who) + ": w must be a half-line weight");
}

inline MembershipReport make_report(std::string name, const Sup& s) {
    MembershipReport r;
    r.class_name = std::move(name);
    r.verdict = Verdict::Empirical;
    r.constant = s.value;
    r.empirical_constant = s.value;
    r.witness = s.witness;
    return r;
}

inline void certify(MembershipReport& r, bool in, double analytic_constant, std::string note = {}) {
    r.verdict = in ? Verdict::CertifiedIn : Verdict::CertifiedOut;
    if (in && std::isfinite(analytic_constant)) r.constant = analytic_constant;
    if (!in && !std::isfinite(analytic_constant)) r.constant = analytic_constant;
    r.note = std::move(note);
}

/// Integral of W(t)/t over (0, r), panel by panel in closed form.
inline double integral_primitive_over_t(const Weight& w, double r) {
    double s = 0.0;
    for (const auto& p : w.pieces()) {
        if (p.lo >= r) break;
        const double lo = p.lo;
        const double hi = std::min(p.hi, r);
        const double base = w.primitive(lo);
        const double e = p.expo;
        if (lo == 0.0) {
            // W(t) = c t^(e+1)/(e+1) on this panel.
            s += p.coef * std::pow(hi, e + 1.0) / ((e + 1.0) * (e + 1.0));
            continue;
        }
        const double log_ratio = std::log(hi / lo);
        s += base * log_ratio;
        if (p.coef == 0.0) continue;
        if (e == -1.0) {
            s += p.coef * 0.5 * log_ratio * log_ratio;
        } else {
            s += p.coef * (power_mass(lo, hi, e) - std::pow(lo, e + 1.0) * log_ratio) / (e + 1.0);
        }
    }
    return s;
}

} // namespace detail

/// Delta_2: W(2r) <= C W(r).
inline MembershipReport check_delta2(const Weight& w, const SearchConfig& cfg = {}) {
    detail::require_half(w, "check_delta2");
    detail::Sup sup;
    for (double r : cfg.scales.values()) {
        const double num = w.primitive(2.0 * r), den = w.primitive(r);
        const double ratio = den > 0.0 ? num / den : (num > 0.0 ? kInf : 1.0);
        sup.offer(ratio, [&] { return "r=" + format_number(r); });
    }
    auto rep = detail::make_report("Delta_2", sup);
    if (w.is_power()) detail::certify(rep, true, std::pow(2.0, w.exponent() + 1.0));
    return rep;
}

/// Muckenhoupt A_p, p > 1.
inline MembershipReport check_Ap(const Weight& u, double p, const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_Ap");
    require_domain(p > 1.0, "check_Ap: p must exceed 1 (use check_A1)");
    const double s = -1.0 / (p - 1.0);
    detail::Sup sup;
    for (const auto& iv : interval_grid(cfg)) {
        const double len = iv.length();
        const double avg = u.measure(iv.a, iv.b) / len;
        const double dual = u.integral_pow(iv.a, iv.b, s) / len;
        const double prod = std::isinf(dual) ? kInf : avg * std::pow(dual, p - 1.0);
        sup.offer(prod, [&] { return "I=" + format_interval(iv); });
    }
    auto rep = detail::make_report("A_p", sup);
    if (u.is_power()) {
        const double k = u.exponent();
        // u^(-1/(p-1)) must be locally integrable: -k/(p-1) > -1.
        detail::certify(rep, k < p - 1.0, u.is_unit() ? 1.0 : kInf);
    }
    return rep;
}

namespace detail {

/// Mu(x) over intervals whose endpoints come from x -/+ scales, the weight's
/// knots and the origin.
inline double maximal_of_weight(const Weight& u, double x, const std::vector<double>& scales) {
    std::vector<double> left{x}, right{x};
    for (double s : scales) {
        left.push_back(x - s);
        right.push_back(x + s);
    }
    for (double k : u.knots()) {
        if (k < x) left.push_back(k);
        if (k > x) right.push_back(k);
    }
    if (0.0 < x) left.push_back(0.0);
    if (0.0 > x) right.push_back(0.0);
    double best = 0.0;
    for (double l : left)
        for (double r : right)
            if (l < r) best = std::max(best, u.measure(l, r) / (r - l));
    return best;
}

inline std::vector<double> point_grid(const SearchConfig& cfg) {
    std::vector<double> xs;
    for (double c : cfg.centers)
        for (double s : cfg.scales.values()) {
            xs.push_back(c + s);
            xs.push_back(c - s);
        }
    std::erase(xs, 0.0);
    return xs;
}

} // namespace detail

/// A_1: Mu(x) <= C u(x).
inline MembershipReport check_A1(const Weight& u, const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_A1");
    const auto scales = cfg.scales.values();
    detail::Sup sup;
    for (double x : detail::point_grid(cfg)) {
        const double ux = u.density(x);
        const double mu = detail::maximal_of_weight(u, x, scales);
        sup.offer(ux > 0.0 ? mu / ux : kInf, [&] { return "x=" + format_number(x); });
    }
    auto rep = detail::make_report("A_1", sup);
    if (u.is_power()) detail::certify(rep, u.exponent() <= 0.0, u.is_unit() ? 1.0 : kInf);
    return rep;
}

/// B_p: integral over (r, inf) of (r/t)^p w(t) dt <= C W(r).
inline MembershipReport check_Bp(const Weight& w, double p, const SearchConfig& cfg = {}) {
    detail::require_half(w, "check_Bp");
    require_domain(p > 0.0, "check_Bp: p must be positive");
    detail::Sup sup;
    for (double r : cfg.scales.values()) {
        const double tail = std::pow(r, p) * w.moment(r, kInf, -p);
        const double den = w.primitive(r);
        sup.offer(den > 0.0 ? tail / den : kInf, [&] { return "r=" + format_number(r); });
    }
    auto rep = detail::make_report("B_p", sup);
    if (w.is_power()) {
        const double a = w.exponent();
        const bool in = a < p - 1.0;
        detail::certify(rep, in, in ? (a + 1.0) / (p - a - 1.0) : kInf);
    }
    return rep;
}

/// B_{p,inf}: equal to B_p for p > 1, p-quasi-concavity of W for p <= 1.
inline MembershipReport check_Bp_weak(const Weight& w, double p, const SearchConfig& cfg = {}) {
    detail::require_half(w, "check_Bp_weak");
    require_domain(p > 0.0, "check_Bp_weak: p must be positive");
    if (p > 1.0) {
        auto rep = check_Bp(w, p, cfg);
        rep.class_name = "B_p,inf";
        rep.note = "p > 1: identical to B_p";
        return rep;
    }
    // sup over r <= t of (W(t)/t^p) / (W(r)/r^p).
    const auto grid = cfg.scales.values();
    detail::Sup sup;
    double min_q = kInf;
    double argmin = 0.0;
    for (double t : grid) {
        const double q = w.primitive(t) / std::pow(t, p);
        if (q < min_q) {
            min_q = q;
            argmin = t;
        }
        const double ratio = min_q > 0.0 ? q / min_q : (q > 0.0 ? kInf : 1.0);
        sup.offer(ratio, [&] { return "r=" + format_number(argmin) + ", t=" + format_number(t); });
    }
    auto rep = detail::make_report("B_p,inf", sup);
    if (w.is_power()) {
        const bool in = w.exponent() + 1.0 <= p;
        detail::certify(rep, in, in ? 1.0 : kInf, "p <= 1: p-quasi-concavity of W");
    } else {
        rep.note = "p <= 1: p-quasi-concavity of W";
    }
    return rep;
}

/// B*_inf: integral over (0, r) of W(t)/t dt <= C W(r).
inline MembershipReport check_Bstar_infty(const Weight& w, const SearchConfig& cfg = {}) {
    detail::require_half(w, "check_Bstar_infty");
    detail::Sup sup;
    for (double r : cfg.scales.values()) {
        const double den = w.primitive(r);
        const double num = detail::integral_primitive_over_t(w, r);
        sup.offer(den > 0.0 ? num / den : (num > 0.0 ? kInf : 0.0), [&] { return "r=" + format_number(r); });
    }
    auto rep = detail::make_report("B*_inf", sup);
    if (w.is_power()) detail::certify(rep, true, 1.0 / (w.exponent() + 1.0));
    return rep;
}

namespace detail {

/// Subintervals of I with length fraction nu: centered, left- and right-aligned.
inline std::vector<Interval> subintervals(const Interval& iv, double nu) {
    const double len = iv.length() * nu;
    const double m = iv.center();
    if (nu >= 1.0) return {iv};
    return {{m - 0.5 * len, m + 0.5 * len}, {iv.a, iv.a + len}, {iv.b - len, iv.b}};
}

/// W(u(I)) / W(u(E)) * (|E| / |I|)^p, the quantity bounded in the geometric
/// necessary condition.
inline double geometric_ratio(const Weight& u, const Weight& w, const Interval& I, const Interval& E, double p) {
    const double wi = w.primitive(u.measure(I.a, I.b));
    const double we = w.primitive(u.measure(E.a, E.b));
    if (we == 0.0) return wi > 0.0 ? kInf : 0.0;
    return wi / we * std::pow(E.length() / I.length(), p);
}

} // namespace detail

/// W(u(I)) / W(u(E)) <~ (|I|/|E|)^p over E subset of I.
///
/// E ranges over interval subsets only (centered and end-aligned), so the
/// empirical constant is interval-restricted. For u = |x|^k, w = t^l the
/// interval family is bounded iff max(k + 1, 1) * (l + 1) <= p: centered E
/// around the origin give the exponent (k + 1)(l + 1), subsets away from the
/// origin give (l + 1).
inline MembershipReport check_quasiconcave_uw(const Weight& u, const Weight& w, double p,
                                              const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_quasiconcave_uw");
    detail::require_half(w, "check_quasiconcave_uw");
    require_domain(p > 0.0, "check_quasiconcave_uw: p must be positive");
    const auto fractions = cfg.fractions.values();
    detail::Sup sup;
    for (const auto& I : interval_grid(cfg))
        for (double nu : fractions)
            for (const auto& E : detail::subintervals(I, nu))
                sup.offer(detail::geometric_ratio(u, w, I, E, p),
                          [&] { return "I=" + format_interval(I) + ", E=" + format_interval(E); });
    auto rep = detail::make_report("quasiconcave_uw", sup);
    rep.note = "interval-restricted";
    if (u.is_power() && w.is_power()) {
        const double k = u.exponent(), l = w.exponent();
        detail::certify(rep, std::max(k + 1.0, 1.0) * (l + 1.0) <= p, kInf, "interval-restricted");
    }
    return rep;
}

/// Decreasing rearrangement profile of u restricted to an interval I, with
/// respect to Lebesgue measure. Supports psi_I (largest u-mass of a subset of
/// given length) and its inverse by bisection on the level threshold.
class IntervalProfile {
public:
    IntervalProfile(const Weight& u, const Interval& I) : length_(I.length()) {
        require_domain(I.a < I.b, "IntervalProfile: empty interval");
        for (const auto& p : u.pieces()) {
            const double l = std::max(p.lo, I.a), h = std::min(p.hi, I.b);
            if (!(l < h) || p.coef == 0.0) continue;
            if (p.expo == 0.0) {
                parts_.push_back({l, h, p.coef, 0.0});
            } else if (h <= 0.0) {
                parts_.push_back({-h, -l, p.coef, p.expo});
            } else {
                parts_.push_back({l, h, p.coef, p.expo});
            }
        }
        total_ = mass_above(0.0);
        support_ = length_above(0.0);
        // Lowest positive value of u on I and the length over which u stays
        // within a relative 1/e-scale of it near its minimizer.
        for (const auto& p : parts_) {
            const double x0 = p.expo > 0.0 ? p.lo : p.hi;
            const double v = p.expo == 0.0 ? p.coef : p.coef * std::pow(x0, p.expo);
            const double flat = p.expo == 0.0 ? p.hi - p.lo : x0 / std::abs(p.expo);
            if (v < min_value_ || (v == min_value_ && flat < flat_)) {
                min_value_ = v;
                flat_ = flat;
            }
        }
    }

    [[nodiscard]] double length() const { return length_; }
    [[nodiscard]] double mass() const { return total_; }

    /// |{x in I : u(x) > y}|.
    [[nodiscard]] double length_above(double y) const {
        double s = 0.0;
        for (const auto& p : parts_) {
            const auto [l, h] = above(p, y);
            if (l < h) s += h - l;
        }
        return s;
    }

    /// Integral of u over {x in I : u(x) > y}.
    [[nodiscard]] double mass_above(double y) const {
        double s = 0.0;
        for (const auto& p : parts_) {
            const auto [l, h] = above(p, y);
            if (l < h) s += p.coef * power_mass(l, h, p.expo);
        }
        return s;
    }

    /// psi_I(t) = sup{u(F) : F subset of I, |F| = t}.
    [[nodiscard]] double psi(double t) const {
        require_domain(t >= 0.0 && t <= length_ * (1.0 + 1e-12), "psi_I: t outside [0, |I|]");
        if (t <= 0.0) return 0.0;
        if (t >= support_) return total_;
        const double y = threshold([&](double v) { return length_above(v) > t; });
        return mass_above(y) + y * (t - length_above(y));
    }

    /// Smallest t with psi_I(t) >= m.
    [[nodiscard]] double psi_inverse(double m) const {
        require_domain(m >= 0.0 && m <= total_ * (1.0 + 1e-12), "psi_I inverse: mass outside [0, u(I)]");
        if (m <= 0.0) return 0.0;
        if (m >= total_) return support_;
        const double y = threshold([&](double v) { return mass_above(v) > m; });
        return std::min(length_, length_above(y) + (m - mass_above(y)) / y);
    }

    /// phi_I(t) = sup{|E| : E subset of I, u(E) = t}.
    ///
    /// Equal to |I| - psi_I^{-1}(u(I) - t), but evaluated from the low end of
    /// the profile (the lightest part of I is filled first) so that small t
    /// does not suffer the cancellation in u(I) - t.
    [[nodiscard]] double phi(double t) const {
        require_domain(t >= 0.0 && t <= total_ * (1.0 + 1e-12), "phi_I: t outside [0, u(I)]");
        if (t >= total_) return length_;
        if (t <= 0.0) return length_ - support_;
        // Below a relative 1e-9 of the flat zone the level bracket cannot
        // resolve the set any more; u is constant to that accuracy there.
        if (min_value_ > 0.0 && t < 1e-9 * min_value_ * flat_) return (length_ - support_) + t / min_value_;
        const auto [y, y_hi] = bracket([&](double v) { return mass_below(v) <= t; });
        (void)y_hi;
        return std::min(length_, (length_ - support_) + length_below(y) + (t - mass_below(y)) / y);
    }

    /// |{x in I : 0 < u(x) < y}|.
    [[nodiscard]] double length_below(double y) const {
        double s = 0.0;
        for (const auto& p : parts_) {
            const auto [l, h] = below(p, y);
            if (l < h) s += h - l;
        }
        return s;
    }

    /// Integral of u over {x in I : u(x) < y}.
    [[nodiscard]] double mass_below(double y) const {
        double s = 0.0;
        for (const auto& p : parts_) {
            const auto [l, h] = below(p, y);
            if (l < h) s += p.coef * power_mass(l, h, p.expo);
        }
        return s;
    }

private:
    struct Part {
        double lo, hi, coef, expo;  // expo != 0 implies 0 <= lo
    };

    static std::pair<double, double> above(const Part& p, double y) {
        if (p.expo == 0.0) return p.coef > y ? std::pair{p.lo, p.hi} : std::pair{0.0, 0.0};
        if (y <= 0.0) return {p.lo, p.hi};
        const double rho = std::pow(y / p.coef, 1.0 / p.expo);
        return p.expo > 0.0 ? std::pair{std::max(p.lo, rho), p.hi} : std::pair{p.lo, std::min(p.hi, rho)};
    }

    static std::pair<double, double> below(const Part& p, double y) {
        if (y <= 0.0) return {0.0, 0.0};
        if (p.expo == 0.0) return p.coef < y ? std::pair{p.lo, p.hi} : std::pair{0.0, 0.0};
        const double rho = std::pow(y / p.coef, 1.0 / p.expo);
        return p.expo > 0.0 ? std::pair{p.lo, std::min(p.hi, rho)} : std::pair{std::max(p.lo, rho), p.hi};
    }

    /// Levels lo < hi within a relative 2^-60 where the monotone predicate
    /// (true for small y) turns false.
    template <class P>
    static std::pair<double, double> bracket(P&& pred) {
        double hi = 1.0;
        while (pred(hi) && hi < 1e300) hi *= 2.0;
        double lo = 0.5 * hi;
        while (!pred(lo) && lo > 1e-300) lo *= 0.5;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (pred(mid)) lo = mid; else hi = mid;
        }
        return {lo, hi};
    }

    /// Smallest level at which the predicate turns false.
    template <class P>
    static double threshold(P&& pred) {
        return bracket(std::forward<P>(pred)).second;
    }

    double length_;
    double total_ = 0.0;
    double support_ = 0.0;
    double min_value_ = kInf;
    double flat_ = kInf;
    std::vector<Part> parts_;
};

inline double psi_I(const Weight& u, const Interval& I, double t) { return IntervalProfile(u, I).psi(t); }
inline double phi_I(const Weight& u, const Interval& I, double t) { return IntervalProfile(u, I).phi(t); }

inline constexpr double kGenHardyTol = 1e-6;

/// Left side of the generalized Hardy necessary condition for one interval:
/// (integral over (0, u(I)) of (phi_I(t)/W(t))^p' w(t) dt)^(1/p').
inline double gen_hardy_lhs(const Weight& u, const Weight& w, const Interval& I, double p) {
    const double q = p / (p - 1.0);
    const IntervalProfile prof(u, I);
    auto integrand = [&](double t) {
        const double W = w.primitive(t);
        const double ph = prof.phi(std::min(t, prof.mass()));
        if (W == 0.0) return ph > 0.0 ? kInf : 0.0;
        return std::pow(ph / W, q) * w.density(t);
    };
    const double s = detail::integrate_from_zero(integrand, prof.mass(), kGenHardyTol);
    return std::pow(s, 1.0 / q);
}

/// sup over I of gen_hardy_lhs * W(u(I))^(1/p) / |I|; always empirical.
inline MembershipReport check_gen_hardy_nec(const Weight& u, const Weight& w, double p,
                                            const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_gen_hardy_nec");
    detail::require_half(w, "check_gen_hardy_nec");
    require_domain(p > 1.0, "check_gen_hardy_nec: p must exceed 1");
    detail::Sup sup;
    for (const auto& I : interval_grid(cfg)) {
        const double lhs = gen_hardy_lhs(u, w, I, p);
        const double c = lhs * std::pow(w.primitive(u.measure(I.a, I.b)), 1.0 / p) / I.length();
        sup.offer(c, [&] { return "I=" + format_interval(I); });
    }
    return detail::make_report("gen_hardy_nec", sup);
}

/// ||u^-1 chi_I||' * ||chi_I|| <~ |I|.
///
/// p <= 1 uses the reduction to sup over E subset of I of |E| / W(u(E))^(1/p),
/// which makes the constant the (1/p)-th power of the quasi-concavity one on
/// the same grid; p > 1 delegates to check_gen_hardy_nec.
inline MembershipReport check_dual_pair(const Weight& u, const Weight& w, double p, const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_dual_pair");
    detail::require_half(w, "check_dual_pair");
    require_domain(p > 0.0, "check_dual_pair: p must be positive");
    if (p > 1.0) {
        auto rep = check_gen_hardy_nec(u, w, p, cfg);
        rep.class_name = "dual_pair";
        rep.note = "p > 1: generalized Hardy form";
        return rep;
    }
    const auto fractions = cfg.fractions.values();
    detail::Sup sup;
    for (const auto& I : interval_grid(cfg))
        for (double nu : fractions)
            for (const auto& E : detail::subintervals(I, nu)) {
                const double r = detail::geometric_ratio(u, w, I, E, p);
                sup.offer(std::pow(r, 1.0 / p),
                          [&] { return "I=" + format_interval(I) + ", E=" + format_interval(E); });
            }
    auto rep = detail::make_report("dual_pair", sup);
    rep.note = "p <= 1: interval-restricted subset search";
    if (u.is_power() && w.is_power()) {
        const double k = u.exponent(), l = w.exponent();
        detail::certify(rep, std::max(k + 1.0, 1.0) * (l + 1.0) <= p, kInf, rep.note);
    }
    return rep;
}

namespace detail {

/// Numeric membership of t^p / W(t) in L^{p'-1}((0,1), dt/t), decided from the
/// log-log slope of t^p / W(t) near the origin (p' = inf for p <= 1).
inline bool p_w_member(const Weight& w, double p) {
    const double t1 = 1e-10, t2 = 1e-9;
    const double w1 = w.primitive(t1), w2 = w.primitive(t2);
    if (w1 <= 0.0 || w2 <= 0.0) return false;
    const double slope = p - std::log(w2 / w1) / std::log(t2 / t1);
    if (p > 1.0) return slope > 1e-9;
    return slope > -1e-9;
}

} // namespace detail

/// Bisection on p over the numeric membership test.
inline double p_w_index_numeric(const Weight& w) {
    detail::require_half(w, "p_w_index");
    double lo = 1e-9, hi = 1e3;
    if (detail::p_w_member(w, lo)) return 0.0;
    if (!detail::p_w_member(w, hi)) return kInf;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (detail::p_w_member(w, mid)) hi = mid; else lo = mid;
    }
    return hi;
}

/// p_w = inf{p > 0 : t^p / W(t) in L^{p'-1}((0,1), dt/t)}; alpha + 1 for t^alpha.
inline double p_w_index(const Weight& w) {
    detail::require_half(w, "p_w_index");
    if (w.is_power()) return w.exponent() + 1.0;
    return p_w_index_numeric(w);
}

/// sup over b, nu of W(u(-b nu, b nu)) / W(u(-b, b)) * (1 + log(1/nu))^p.
inline MembershipReport check_log_condition(const Weight& u, const Weight& w, double p,
                                            const SearchConfig& cfg = {}) {
    detail::require_line(u, "check_log_condition");
    detail::require_half(w, "check_log_condition");
    require_domain(p > 0.0, "check_log_condition: p must be positive");
    const auto fractions = cfg.fractions.values();
    detail::Sup sup;
    for (double b : cfg.scales.values()) {
        const double den = w.primitive(u.measure(-b, b));
        for (double nu : fractions) {
            const double num = w.primitive(u.measure(-b * nu, b * nu));
            const double ratio = den > 0.0 ? num / den : 0.0;
            sup.offer(ratio * std::pow(1.0 + std::log(1.0 / nu), p),
                      [&] { return "b=" + format_number(b) + ", nu=" + format_number(nu); });
        }
    }
    auto rep = detail::make_report("log_condition", sup);
    if (u.is_power() && w.is_power()) {
        // ratio = nu^g with g = (k+1)(l+1); max over nu of nu^g (1 + log 1/nu)^p.
        const double g = (u.exponent() + 1.0) * (w.exponent() + 1.0);
        const double c = p > g ? std::pow(p / g, p) * std::exp(g - p) : 1.0;
        detail::certify(rep, true, c);
    }
    return rep;
}

/// A finite family of intervals I_j with subsets S_j.
struct IntervalFamily {
    std::vector<Interval> intervals;
    std::vector<Interval> subsets;
};

/// Single-interval families (every grid interval centered at a grid center
/// with every centered fraction) followed by `random_count` families of
/// 2 to 4 pairwise disjoint intervals, drawn with a fixed seed.
inline std::vector<IntervalFamily> generate_families(const SearchConfig& cfg, std::size_t random_count = 400,
                                                     std::uint64_t seed = 20130101) {
    std::vector<Interval> base;
    for (double c : cfg.centers)
        for (double s : cfg.scales.values()) base.push_back({c - s, c + s});
    const auto fractions = cfg.fractions.values();
    auto centered = [](const Interval& iv, double nu) {
        const double h = 0.5 * iv.length() * nu;
        return Interval{iv.center() - h, iv.center() + h};
    };
    std::vector<IntervalFamily> out;
    for (const auto& I : base)
        for (double nu : fractions) out.push_back({{I}, {centered(I, nu)}});
    detail::Rng rng(seed);
    const int nb = static_cast<int>(base.size());
    const int nf = static_cast<int>(fractions.size());
    while (out.size() < base.size() * fractions.size() + random_count) {
        const int J = rng.integer(2, 4);
        IntervalFamily fam;
        for (int attempt = 0; attempt < 50 && static_cast<int>(fam.intervals.size()) < J; ++attempt) {
            const Interval cand = base[static_cast<std::size_t>(rng.integer(0, nb - 1))];
            const bool disjoint = std::all_of(fam.intervals.begin(), fam.intervals.end(),
                                              [&](const Interval& o) { return cand.b <= o.a || o.b <= cand.a; });
            if (!disjoint) continue;
            fam.intervals.push_back(cand);
            fam.subsets.push_back(centered(cand, fractions[static_cast<std::size_t>(rng.integer(0, nf - 1))]));
        }
        if (fam.intervals.size() >= 2) out.push_back(std::move(fam));
    }
    return out;
}

/// W(u(union I_j)) / W(u(union S_j)) divided by max_j (|I_j| / |S_j|)^q,
/// maximized over the families. Always empirical.
inline MembershipReport check_crs_maximal_condition(const Weight& u, const Weight& w, double p, double q,
                                                    const std::vector<IntervalFamily>& families) {
    detail::require_line(u, "check_crs_maximal_condition");
    detail::require_half(w, "check_crs_maximal_condition");
    require_domain(p > 0.0 && q > 0.0 && q < p, "check_crs_maximal_condition: need 0 < q < p");
    detail::Sup sup;
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto& fam = families[i];
        const double ui = u.measure(IntervalSet(fam.intervals));
        const double us = u.measure(IntervalSet(fam.subsets));
        double worst = 0.0;
        for (std::size_t j = 0; j < fam.intervals.size(); ++j)
            worst = std::max(worst, fam.intervals[j].length() / fam.subsets[j].length());
        const double ws = w.primitive(us);
        const double ratio = ws > 0.0 ? w.primitive(ui) / ws : kInf;
        sup.offer(ratio / std::pow(worst, q), [&] {
            std::string s = "J=" + std::to_string(fam.intervals.size());
            for (std::size_t j = 0; j < fam.intervals.size(); ++j)
                s += " I=" + format_interval(fam.intervals[j]) + " S=" + format_interval(fam.subsets[j]);
            return s;
        });
    }
    auto rep = detail::make_report("crs_maximal", sup);
    rep.note = "q=" + format_number(q);
    return rep;
}

/// Constant of check_crs_maximal_condition for each q in `qs`.
inline std::vector<double> crs_constant_curve(const Weight& u, const Weight& w, double p, const std::vector<double>& qs,
                                              const std::vector<IntervalFamily>& families) {
    std::vector<double> out;
    for (double q : qs) out.push_back(check_crs_maximal_condition(u, w, p, q, families).constant);
    return out;
}

} // namespace hlz
