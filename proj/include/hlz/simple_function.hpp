#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "hlz/error.hpp"
#include "hlz/interval_set.hpp"

namespace hlz {

/// Constant value on an open interval.
struct Segment {
    double a;
    double b;
    double value;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Finitely valued function on the real line with bounded support.
///
/// Stored as sorted, disjoint segments with nonzero values; neighbouring
/// segments that touch and share a value are merged, so every segment endpoint
/// is a genuine jump of the function.
class SimpleFunction {
public:
    struct Piece {
        double value;
        IntervalSet support;
    };

    SimpleFunction() = default;

    /// Pieces must have pairwise disjoint supports.
    explicit SimpleFunction(const std::vector<Piece>& pieces) {
        std::vector<Segment> segs;
        for (const auto& p : pieces) {
            require_domain(std::isfinite(p.value), "SimpleFunction: values must be finite");
            for (const auto& iv : p.support.intervals()) segs.push_back({iv.a, iv.b, p.value});
        }
        *this = from_segments(std::move(segs));
    }

    static SimpleFunction from_segments(std::vector<Segment> segs) {
        for (const auto& s : segs) {
            require_domain(std::isfinite(s.a) && std::isfinite(s.b) && std::isfinite(s.value),
                           "SimpleFunction: segments must be finite");
            require_domain(s.a <= s.b, "SimpleFunction: segment with a > b");
        }
        std::erase_if(segs, [](const Segment& s) { return !(s.a < s.b) || s.value == 0.0; });
        std::sort(segs.begin(), segs.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
        SimpleFunction f;
        for (const auto& s : segs) {
            if (!f.segments_.empty()) {
                auto& back = f.segments_.back();
                require_domain(back.b <= s.a, "SimpleFunction: piece supports overlap");
                if (back.b == s.a && back.value == s.value) {
                    back.b = s.b;
                    continue;
                }
            }
            f.segments_.push_back(s);
        }
        return f;
    }

    static SimpleFunction indicator(double a, double b, double value = 1.0) {
        return from_segments({{a, b, value}});
    }

    static SimpleFunction indicator(const IntervalSet& e, double value = 1.0) {
        return SimpleFunction({Piece{value, e}});
    }

    [[nodiscard]] std::span<const Segment> segments() const { return segments_; }
    [[nodiscard]] bool is_zero() const { return segments_.empty(); }

    /// Distinct values with their supports, ordered by value.
    [[nodiscard]] std::vector<Piece> pieces() const {
        std::map<double, std::vector<Interval>> by_value;
        for (const auto& s : segments_) by_value[s.value].push_back({s.a, s.b});
        std::vector<Piece> out;
        for (auto& [v, ivs] : by_value) out.push_back({v, IntervalSet(std::move(ivs))});
        return out;
    }

    [[nodiscard]] IntervalSet support() const {
        std::vector<Interval> ivs;
        for (const auto& s : segments_) ivs.push_back({s.a, s.b});
        return IntervalSet(std::move(ivs));
    }

    /// Sorted jump points.
    [[nodiscard]] std::vector<double> endpoints() const {
        std::vector<double> e;
        for (const auto& s : segments_) {
            if (e.empty() || e.back() != s.a) e.push_back(s.a);
            e.push_back(s.b);
        }
        return e;
    }

    [[nodiscard]] bool is_endpoint(double x) const {
        for (const auto& s : segments_)
            if (x == s.a || x == s.b) return true;
        return false;
    }

    /// Value at x; at a jump point the value is ambiguous and 0 is not
    /// guaranteed, so callers should avoid endpoints.
    [[nodiscard]] double value_at(double x) const {
        for (const auto& s : segments_)
            if (s.a < x && x < s.b) return s.value;
        return 0.0;
    }

    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (const auto& s : segments_) m = std::max(m, std::abs(s.value));
        return m;
    }

    /// Lebesgue integral of x^j f(x).
    [[nodiscard]] double moment(int j) const {
        double m = 0.0;
        for (const auto& s : segments_)
            m += s.value * (std::pow(s.b, j + 1) - std::pow(s.a, j + 1)) / (j + 1);
        return m;
    }

    [[nodiscard]] double integral() const { return moment(0); }

    /// Smallest interval containing the support; (0, 0) for the zero function.
    [[nodiscard]] Interval hull() const {
        if (segments_.empty()) return {0.0, 0.0};
        return {segments_.front().a, segments_.back().b};
    }

    /// x -> f((x - shift) / dilation).
    [[nodiscard]] SimpleFunction scale_and_translate(double shift, double dilation) const {
        require_domain(dilation > 0.0, "scale_and_translate: dilation must be positive");
        require_domain(std::isfinite(shift) && std::isfinite(dilation), "scale_and_translate: non-finite parameter");
        std::vector<Segment> segs;
        for (const auto& s : segments_) segs.push_back({dilation * s.a + shift, dilation * s.b + shift, s.value});
        return from_segments(std::move(segs));
    }

    /// x -> f(-x).
    [[nodiscard]] SimpleFunction reflected() const {
        std::vector<Segment> segs;
        for (const auto& s : segments_) segs.push_back({-s.b, -s.a, s.value});
        return from_segments(std::move(segs));
    }

    [[nodiscard]] SimpleFunction scaled(double c) const {
        std::vector<Segment> segs;
        for (const auto& s : segments_) segs.push_back({s.a, s.b, c * s.value});
        return from_segments(std::move(segs));
    }

    [[nodiscard]] SimpleFunction abs() const {
        std::vector<Segment> segs;
        for (const auto& s : segments_) segs.push_back({s.a, s.b, std::abs(s.value)});
        return from_segments(std::move(segs));
    }

    /// f with the interval (lo, hi) removed from its support.
    [[nodiscard]] SimpleFunction without(double lo, double hi) const {
        std::vector<Segment> segs;
        for (const auto& s : segments_) {
            if (s.b <= lo || s.a >= hi) {
                segs.push_back(s);
                continue;
            }
            if (s.a < lo) segs.push_back({s.a, lo, s.value});
            if (s.b > hi) segs.push_back({hi, s.b, s.value});
        }
        return from_segments(std::move(segs));
    }

    /// Pointwise combination op(f, g) on the common refinement of both partitions.
    template <class Op>
    [[nodiscard]] static SimpleFunction combine(const SimpleFunction& f, const SimpleFunction& g, Op op) {
        std::vector<double> cuts = f.endpoints();
        const auto ge = g.endpoints();
        cuts.insert(cuts.end(), ge.begin(), ge.end());
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<Segment> segs;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            segs.push_back({cuts[i], cuts[i + 1], op(f.value_at(mid), g.value_at(mid))});
        }
        return from_segments(std::move(segs));
    }

    friend SimpleFunction operator+(const SimpleFunction& f, const SimpleFunction& g) {
        return combine(f, g, [](double x, double y) { return x + y; });
    }

    friend SimpleFunction operator*(double c, const SimpleFunction& f) { return f.scaled(c); }

    friend bool operator==(const SimpleFunction&, const SimpleFunction&) = default;

private:
    std::vector<Segment> segments_;
};

} // namespace hlz
