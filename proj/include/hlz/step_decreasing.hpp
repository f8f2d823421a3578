#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "hlz/error.hpp"
#include "hlz/weight.hpp"

namespace hlz {

/// Nonincreasing, right-continuous, nonnegative step function on (0, inf).
///
/// knots = {0 = t_0 < t_1 < ... < t_n}, levels = {v_1 >= ... >= v_n > 0};
/// the value is v_i on [t_{i-1}, t_i) and 0 from t_n on. Equal neighbouring
/// levels are merged and trailing zero levels dropped, so equal functions have
/// identical knot and level lists.
class StepDecreasing {
public:
    StepDecreasing() : knots_{0.0} {}

    StepDecreasing(std::vector<double> knots, std::vector<double> levels) {
        require_domain(!knots.empty() && knots.front() == 0.0, "StepDecreasing: knots must start at 0");
        require_domain(levels.size() + 1 == knots.size(), "StepDecreasing: need one level per step");
        for (std::size_t i = 1; i < knots.size(); ++i)
            require_domain(knots[i - 1] < knots[i] && std::isfinite(knots[i]),
                           "StepDecreasing: knots must be finite and strictly increasing");
        for (std::size_t i = 0; i < levels.size(); ++i) {
            require_domain(std::isfinite(levels[i]) && levels[i] >= 0.0,
                           "StepDecreasing: levels must be finite and nonnegative");
            if (i > 0) require_domain(levels[i] <= levels[i - 1], "StepDecreasing: levels must not increase");
        }
        knots_.push_back(0.0);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (levels[i] == 0.0) break;
            if (!levels_.empty() && levels_.back() == levels[i]) {
                knots_.back() = knots[i + 1];
            } else {
                levels_.push_back(levels[i]);
                knots_.push_back(knots[i + 1]);
            }
        }
    }

    [[nodiscard]] std::span<const double> knots() const { return knots_; }
    [[nodiscard]] std::span<const double> levels() const { return levels_; }
    [[nodiscard]] std::size_t steps() const { return levels_.size(); }
    [[nodiscard]] bool is_zero() const { return levels_.empty(); }
    /// Right end of the support.
    [[nodiscard]] double end() const { return knots_.back(); }

    [[nodiscard]] double operator()(double t) const {
        require_domain(t >= 0.0, "StepDecreasing: negative argument");
        for (std::size_t i = 0; i < levels_.size(); ++i)
            if (t < knots_[i + 1]) return levels_[i];
        return 0.0;
    }

    /// Integral over (0, t).
    [[nodiscard]] double integral(double t) const {
        double s = 0.0;
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (t <= knots_[i]) break;
            s += levels_[i] * (std::min(t, knots_[i + 1]) - knots_[i]);
        }
        return s;
    }

    [[nodiscard]] double integral() const { return integral(end()); }

    /// Integral of g(t)^p w(t) over (0, inf), panel by panel through W.
    [[nodiscard]] double power_integral(const Weight& w, double p) const {
        double s = 0.0;
        for (std::size_t i = 0; i < levels_.size(); ++i)
            s += std::pow(levels_[i], p) * (w.primitive(knots_[i + 1]) - w.primitive(knots_[i]));
        return s;
    }

    /// Lebesgue distribution lambda -> |{t : g(t) > lambda}|, itself a
    /// StepDecreasing in lambda; applying it twice returns g.
    [[nodiscard]] StepDecreasing distribution() const {
        std::vector<double> knots{0.0};
        std::vector<double> levels;
        for (std::size_t i = levels_.size(); i-- > 0;) {
            knots.push_back(levels_[i]);
            levels.push_back(knots_[i + 1]);
        }
        return {std::move(knots), std::move(levels)};
    }

    friend bool operator==(const StepDecreasing&, const StepDecreasing&) = default;

private:
    std::vector<double> knots_;
    std::vector<double> levels_;
};

} // namespace hlz
