#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hlz;

namespace {

const Weight kOne = Weight::line_power(0.0);

} // namespace

TEST(Distribution, Examples) {
    EXPECT_EQ(distribution(SimpleFunction::indicator(0, 1), kOne), StepDecreasing({0, 1}, {1}));
    const auto f = SimpleFunction::from_segments({{0, 1, 2}, {1, 3, 1}});
    EXPECT_EQ(distribution(f, kOne), StepDecreasing({0, 1, 2}, {3, 1}));
    const double b = 2.5;
    const auto d = distribution(SimpleFunction::indicator(0, b), Weight::line_power(0.6));
    ASSERT_EQ(d.steps(), 1u);
    EXPECT_NEAR(d.levels()[0], std::pow(b, 1.6) / 1.6, 1e-14);
    EXPECT_EQ(d.knots()[1], 1.0);
}

TEST(DecreasingRearrangement, Examples) {
    const auto e = IntervalSet({{-2, -1}, {3, 3.5}});
    EXPECT_EQ(decreasing_rearrangement(SimpleFunction::indicator(e), kOne), StepDecreasing({0, 1.5}, {1}));
    const auto f = SimpleFunction::from_segments({{0, 1, 1}, {2, 3, 3}});
    EXPECT_EQ(decreasing_rearrangement(f, kOne), StepDecreasing({0, 1, 2}, {3, 1}));
    EXPECT_EQ(decreasing_rearrangement(scale_and_translate(f, 7.25, 1), kOne), decreasing_rearrangement(f, kOne));
}

TEST(DecreasingRearrangement, MatchesInfDefinition) {
    detail::Rng rng(17);
    for (const auto& u : oracle::u_families())
        for (int i = 0; i < 60; ++i) {
            const auto f = oracle::random_function(rng);
            const auto g = decreasing_rearrangement(f, u);
            for (int j = 0; j < 20; ++j) {
                const double t = rng.uniform(0, 1.2 * g.end());
                if (std::find(g.knots().begin(), g.knots().end(), t) != g.knots().end()) continue;
                EXPECT_EQ(g(t), oracle::rearrangement(f, u, t));
            }
        }
}

TEST(DecreasingRearrangement, Equimeasurable) {
    detail::Rng rng(23);
    for (const auto& u : oracle::u_families())
        for (int i = 0; i < 100; ++i) {
            const auto f = oracle::random_function(rng);
            const auto pair = rearrange(f, u);
            EXPECT_EQ(pair.distribution, pair.rearrangement.distribution());
            EXPECT_EQ(pair.rearrangement, pair.distribution.distribution());
            // Pointwise against the definition.
            for (const auto& s : f.segments()) {
                const double l = std::abs(s.value);
                EXPECT_NEAR(pair.distribution(l * 0.999), oracle::distribution(f, u, l * 0.999), 1e-12 * (1 + pair.distribution(0)));
            }
        }
}

TEST(DecreasingRearrangement, MonotoneAndHomogeneous) {
    detail::Rng rng(29);
    for (const auto& u : oracle::u_families())
        for (int i = 0; i < 50; ++i) {
            const auto f = oracle::random_function(rng);
            // |f| <= |g| with g = f + extra mass on a fresh interval.
            std::vector<Segment> segs(f.segments().begin(), f.segments().end());
            for (auto& s : segs) s.value = std::abs(s.value) + 0.5;
            segs.push_back({40, 41, 1.0});
            const auto g = SimpleFunction::from_segments(segs);
            const auto fs = decreasing_rearrangement(f, u), gs = decreasing_rearrangement(g, u);
            for (double t : detail::log_grid(1e-3, 2 * gs.end(), 60)) EXPECT_LE(fs(t), gs(t));

            const double c = rng.uniform(-5, 5);
            const auto cs = decreasing_rearrangement(f.scaled(c), u);
            for (double t : detail::log_grid(1e-3, 2 * fs.end(), 60)) EXPECT_NEAR(cs(t), std::abs(c) * fs(t), 1e-12 * std::abs(c) * fs.levels()[0]);
        }
}

TEST(HardyP, Examples) {
    const StepDecreasing chi({0, 1}, {1});
    EXPECT_DOUBLE_EQ(hardy_P(chi, 2), 0.5);
    EXPECT_DOUBLE_EQ(hardy_P(chi, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(hardy_P(StepDecreasing({0, 1, 2}, {3, 1}), 2), 2.0);
    EXPECT_THROW(hardy_P(chi, 0), DomainError);
    EXPECT_THROW(hardy_P(chi, -1), DomainError);
}

TEST(ConjugateQ, Examples) {
    const StepDecreasing chi({0, 1}, {1});
    EXPECT_EQ(conjugate_Q(chi, 1), 0.0);
    EXPECT_DOUBLE_EQ(conjugate_Q(chi, 0.5), std::log(2.0));
    EXPECT_NEAR(conjugate_Q(StepDecreasing({0, std::exp(1.0)}, {1}), 1), 1.0, 1e-15);
    EXPECT_EQ(conjugate_Q(chi, 5), 0.0);
    EXPECT_THROW(conjugate_Q(chi, 0), DomainError);
}

TEST(HardyOperators, AgainstQuadrature) {
    detail::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const auto g = decreasing_rearrangement(oracle::random_function(rng), oracle::u_families()[i % 3]);
        for (double t : {0.05, 0.7, 3.0, 11.0}) {
            double p = 0.0, q = 0.0;
            const auto k = g.knots();
            // Panelwise Simpson between knots; exact for the piecewise constant g.
            for (std::size_t j = 0; j + 1 < k.size(); ++j) {
                const double lo = std::min(k[j], t), hi = std::min(k[j + 1], t);
                p += oracle::simpson([&](double s) { return g(s); }, lo, hi);
                const double ql = std::max(k[j], t), qh = std::max(k[j + 1], t);
                q += oracle::simpson([&](double s) { return g(s) / s; }, ql, qh, 1e-14);
            }
            EXPECT_NEAR(hardy_P(g, t), p / t, 1e-9 * (1 + p / t));
            EXPECT_NEAR(conjugate_Q(g, t), q, 1e-9 * (1 + q));
        }
    }
}

TEST(HardyOperators, Invariants) {
    detail::Rng rng(37);
    for (int i = 0; i < 60; ++i) {
        const auto g = decreasing_rearrangement(oracle::random_function(rng), oracle::u_families()[i % 3]);
        double prev_p = kInf, prev_q = kInf;
        for (double t : detail::log_grid(1e-3, 4 * g.end(), 80)) {
            const double p = hardy_P(g, t), q = conjugate_Q(g, t);
            EXPECT_GE(p, g(t) * (1 - 1e-14));
            EXPECT_LE(p, prev_p * (1 + 1e-14));
            EXPECT_LE(q, prev_q * (1 + 1e-14));
            prev_p = p;
            prev_q = q;
        }
        // Continuity across a knot.
        const double t = g.knots()[1];
        EXPECT_NEAR(hardy_P(g, t * (1 - 1e-12)), hardy_P(g, t), 1e-9 * hardy_P(g, t));
    }
}

TEST(DoubleStar, Examples) {
    const auto chi = SimpleFunction::indicator(0, 1);
    EXPECT_DOUBLE_EQ(double_star(chi, kOne, 2), 0.5);
    EXPECT_DOUBLE_EQ(double_star(chi, kOne, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(double_star(SimpleFunction::from_segments({{0, 1, 3}, {1, 2, 1}}), kOne, 2), 2.0);
}

TEST(StepDecreasing, RejectsMalformed) {
    EXPECT_THROW(StepDecreasing({1, 2}, {1}), DomainError);
    EXPECT_THROW(StepDecreasing({0, 1, 2}, {1, 2}), DomainError);
    EXPECT_THROW(StepDecreasing({0, 2, 1}, {2, 1}), DomainError);
    EXPECT_THROW(StepDecreasing({0, 1}, {-1}), DomainError);
}
