#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hlz/error.hpp"

namespace hlz {

/// Bounded open interval (a, b).
struct Interval {
    double a = 0.0;
    double b = 0.0;

    [[nodiscard]] double length() const { return b - a; }
    [[nodiscard]] double center() const { return 0.5 * (a + b); }
    [[nodiscard]] bool contains(double x) const { return a < x && x < b; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite disjoint union of open intervals, kept sorted and merged.
///
/// Endpoints carry no mass for any absolutely continuous measure, so
/// intervals that touch are merged and zero-length intervals are dropped on
/// construction. Two sets describing the same union compare equal.
class IntervalSet {
public:
    IntervalSet() = default;

    IntervalSet(std::initializer_list<Interval> intervals)
        : IntervalSet(std::vector<Interval>(intervals)) {}

    explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
        for (const auto& iv : intervals_) {
            require_domain(std::isfinite(iv.a) && std::isfinite(iv.b),
                           "IntervalSet: endpoints must be finite");
            require_domain(iv.a <= iv.b, "IntervalSet: interval with a > b");
        }
        canonicalize();
    }

    static IntervalSet single(double a, double b) { return IntervalSet({Interval{a, b}}); }

    [[nodiscard]] std::span<const Interval> intervals() const { return intervals_; }
    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] std::size_t size() const { return intervals_.size(); }

    /// Lebesgue measure.
    [[nodiscard]] double measure() const {
        double m = 0.0;
        for (const auto& iv : intervals_) m += iv.length();
        return m;
    }

    [[nodiscard]] bool contains(double x) const {
        auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                                   [](double v, const Interval& iv) { return v < iv.b; });
        return it != intervals_.end() && it->contains(x);
    }

    [[nodiscard]] std::vector<double> endpoints() const {
        std::vector<double> e;
        e.reserve(2 * intervals_.size());
        for (const auto& iv : intervals_) {
            e.push_back(iv.a);
            e.push_back(iv.b);
        }
        return e;
    }

    [[nodiscard]] IntervalSet unite(const IntervalSet& other) const {
        std::vector<Interval> all(intervals_);
        all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
        return IntervalSet(std::move(all));
    }

    [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const {
        std::vector<Interval> out;
        std::size_t i = 0, j = 0;
        while (i < intervals_.size() && j < other.intervals_.size()) {
            const auto& x = intervals_[i];
            const auto& y = other.intervals_[j];
            const double lo = std::max(x.a, y.a);
            const double hi = std::min(x.b, y.b);
            if (lo < hi) out.push_back({lo, hi});
            if (x.b < y.b) ++i; else ++j;
        }
        return IntervalSet(std::move(out));
    }

    /// Set difference; the removed interval may be unbounded on either side.
    [[nodiscard]] IntervalSet subtract(double lo, double hi) const {
        std::vector<Interval> out;
        for (const auto& iv : intervals_) {
            if (iv.b <= lo || iv.a >= hi) {
                out.push_back(iv);
                continue;
            }
            if (iv.a < lo) out.push_back({iv.a, lo});
            if (iv.b > hi) out.push_back({hi, iv.b});
        }
        return IntervalSet(std::move(out));
    }

    /// Image under x -> dilation * x + shift.
    [[nodiscard]] IntervalSet affine(double dilation, double shift) const {
        require_domain(dilation > 0.0, "IntervalSet::affine: dilation must be positive");
        std::vector<Interval> out;
        out.reserve(intervals_.size());
        for (const auto& iv : intervals_) out.push_back({dilation * iv.a + shift, dilation * iv.b + shift});
        return IntervalSet(std::move(out));
    }

    [[nodiscard]] IntervalSet reflect() const {
        std::vector<Interval> out;
        out.reserve(intervals_.size());
        for (const auto& iv : intervals_) out.push_back({-iv.b, -iv.a});
        return IntervalSet(std::move(out));
    }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    void canonicalize() {
        std::erase_if(intervals_, [](const Interval& iv) { return !(iv.a < iv.b); });
        std::sort(intervals_.begin(), intervals_.end(),
                  [](const Interval& l, const Interval& r) { return l.a < r.a || (l.a == r.a && l.b < r.b); });
        std::vector<Interval> merged;
        for (const auto& iv : intervals_) {
            if (!merged.empty() && iv.a <= merged.back().b) {
                merged.back().b = std::max(merged.back().b, iv.b);
            } else {
                merged.push_back(iv);
            }
        }
        intervals_ = std::move(merged);
    }

    std::vector<Interval> intervals_;
};

} // namespace hlz
