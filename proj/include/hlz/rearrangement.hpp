#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "hlz/foundations.hpp"

namespace hlz {

struct LevelMass {
    double level;
    double mass;
};

/// Distinct values of |f| in decreasing order, each with the u-measure of
/// the set where |f| takes it. Levels of zero u-mass are omitted.
inline std::vector<LevelMass> level_masses(const SimpleFunction& f, const Weight& u) {
    require_domain(u.support() == Support::RealLine, "level_masses: u must be a real-line weight");
    std::map<double, double, std::greater<>> mass;
    for (const auto& s : f.segments()) mass[std::abs(s.value)] += u.measure(s.a, s.b);
    std::vector<LevelMass> out;
    for (const auto& [level, m] : mass)
        if (m > 0.0) out.push_back({level, m});
    return out;
}

/// lambda -> u({x : |f(x)| > lambda}).
inline StepDecreasing distribution(const SimpleFunction& f, const Weight& u) {
    const auto lm = level_masses(f, u);
    std::vector<double> cumulative;
    double acc = 0.0;
    for (const auto& e : lm) cumulative.push_back(acc += e.mass);
    std::vector<double> knots{0.0};
    std::vector<double> levels;
    for (std::size_t i = lm.size(); i-- > 0;) {
        knots.push_back(lm[i].level);
        levels.push_back(cumulative[i]);
    }
    return {std::move(knots), std::move(levels)};
}

/// f*_u(t) = inf{lambda : u(|f| > lambda) <= t}: the i-th largest |value|
/// on a step whose length is the u-mass of its level set.
inline StepDecreasing decreasing_rearrangement(const SimpleFunction& f, const Weight& u) {
    const auto lm = level_masses(f, u);
    std::vector<double> knots{0.0};
    std::vector<double> levels;
    double acc = 0.0;
    for (const auto& e : lm) {
        knots.push_back(acc += e.mass);
        levels.push_back(e.level);
    }
    return {std::move(knots), std::move(levels)};
}

struct RearrangementPair {
    StepDecreasing distribution;
    StepDecreasing rearrangement;
};

inline RearrangementPair rearrange(const SimpleFunction& f, const Weight& u) {
    return {distribution(f, u), decreasing_rearrangement(f, u)};
}

/// Hardy average (1/t) * integral of g over (0, t).
inline double hardy_P(const StepDecreasing& g, double t) {
    require_domain(t > 0.0, "hardy_P: t must be positive");
    return g.integral(t) / t;
}

/// Integral of g(s) ds / s over (t, inf).
inline double conjugate_Q(const StepDecreasing& g, double t) {
    require_domain(t > 0.0, "conjugate_Q: t must be positive");
    const auto k = g.knots();
    const auto v = g.levels();
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (k[i + 1] <= t) continue;
        s += v[i] * std::log(k[i + 1] / std::max(k[i], t));
    }
    return s;
}

/// f**_u(t) = P f*_u(t).
inline double double_star(const SimpleFunction& f, const Weight& u, double t) {
    return hardy_P(decreasing_rearrangement(f, u), t);
}

} // namespace hlz
