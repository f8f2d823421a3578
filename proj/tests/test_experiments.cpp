#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hlz;

namespace {

const Weight kOne = Weight::line_power(0.0);
const Weight kHalfOne = Weight::half_power(0.0);

} // namespace

TEST(WeakTypeRatio, UnitWeightsIndicatorClosedForm) {
    // u = w = 1, p = 1: sup over lambda of lambda * 2 (phi + psi) / b, with
    // phi + psi = 2b e / (e^2 - 1), e = exp(pi lambda).
    double expected = 0.0;
    for (double l : detail::log_grid(1e-9, 10, 20000)) {
        const double e = std::exp(std::numbers::pi * l);
        expected = std::max(expected, 2.0 * l * 2.0 * e / (e * e - 1.0));
    }
    for (double b : {0.01, 1.0, 30.0}) {
        const double r = weak_type_ratio(SimpleFunction::indicator(0, b), kOne, kHalfOne, 1);
        EXPECT_NEAR(r, expected, 1e-6);
    }
    EXPECT_NEAR(expected, 2 / std::numbers::pi, 1e-6);
}

TEST(WeakTypeRatio, ScaleInvarianceAndReflection) {
    const double a = weak_type_ratio(SimpleFunction::indicator(0, 1), kOne, kHalfOne, 2);
    const double b = weak_type_ratio(SimpleFunction::indicator(0, 10), kOne, kHalfOne, 2);
    EXPECT_TRUE(std::isfinite(a));
    EXPECT_LT(oracle::rel_err(a, b), 1e-3);
    const auto u = Weight::line_power(-0.5), w = Weight::half_power(0.3);
    detail::Rng rng(109);
    for (int i = 0; i < 3; ++i) {
        const auto f = oracle::random_function(rng, 4);
        const double r1 = weak_type_ratio(f, u, w, 1.5), r2 = weak_type_ratio(f.reflected(), u, w, 1.5);
        EXPECT_LT(oracle::rel_err(r1, r2), 1e-3);
    }
    EXPECT_THROW(weak_type_ratio(SimpleFunction{}, kOne, kHalfOne, 1), DomainError);
}

TEST(StrongTypeRatio, Examples) {
    const auto chi = SimpleFunction::indicator(0, 1);
    EXPECT_EQ(strong_type_ratio(chi, kOne, kHalfOne, 1), kInf);
    const double s = strong_type_ratio(chi, kOne, Weight::half_power(0.5), 2);
    EXPECT_TRUE(std::isfinite(s));
    EXPECT_GE(s, weak_type_ratio(chi, kOne, Weight::half_power(0.5), 2) * (1 - 1e-6));
}

TEST(StrongTypeRatio, DominatesWeak) {
    detail::Rng rng(113);
    const auto w = Weight::half_power(0.5);
    for (int i = 0; i < 6; ++i) {
        const auto f = oracle::random_function(rng, 5);
        const auto u = i % 2 ? kOne : Weight::line_power(-0.5);
        EXPECT_GE(strong_type_ratio(f, u, w, 2) * (1 + 1e-3), weak_type_ratio(f, u, w, 2));
    }
}

TEST(Reconstruction, MatchesClosedFormLevelSets) {
    const SearchConfig cfg;
    for (const auto& u : oracle::u_families())
        for (auto [a, b] : {std::pair{0.0, 1.0}, {-3.0, 0.5}, {2.0, 7.0}}) {
            const LevelSetReconstruction rec(SimpleFunction::indicator(a, b), Operator::Hilbert);
            for (double l : cfg.lambdas.values()) {
                const double exact = level_set_single_interval(a, b, l, u);
                EXPECT_LT(oracle::rel_err(rec.distribution(l, u), exact), 1e-3) << a << " " << b << " " << l;
            }
        }
}

TEST(Reconstruction, SuperlevelAgreesWithPointEvaluation) {
    detail::Rng rng(127);
    for (int i = 0; i < 10; ++i) {
        const auto f = oracle::random_function(rng, 5);
        for (Operator op : {Operator::Hilbert, Operator::HilbertMaximal, Operator::HardyLittlewood}) {
            const LevelSetReconstruction rec(f, op);
            const double lam = 0.3 * rec.peak_value();
            const auto set = rec.superlevel(lam);
            for (int j = 0; j < 200; ++j) {
                const double x = rng.uniform(-30, 30);
                if (f.is_endpoint(x)) continue;
                const double v = apply_operator(op, f, x);
                if (std::abs(v - lam) < 1e-6 * lam) continue;
                // Skip points within rounding distance of a crossing.
                bool near = false;
                for (const auto& iv : set.intervals()) near = near || std::abs(x - iv.a) < 1e-7 || std::abs(x - iv.b) < 1e-7;
                if (near) continue;
                EXPECT_EQ(set.contains(x), v > lam) << to_string(op) << " x=" << x;
            }
        }
    }
}

TEST(PointwiseVV, Examples) {
    const auto chi = SimpleFunction::indicator(0, 1);
    const auto rep = check_pointwise_vv(chi, kOne, detail::log_grid(1e-3, 1e3, 50));
    EXPECT_TRUE(rep.holds);
    EXPECT_LE(rep.max_ratio, 1.1);
    const auto zero = check_pointwise_vv(SimpleFunction{}, kOne, {0.5, 1.0});
    EXPECT_TRUE(zero.holds);
    EXPECT_EQ(zero.lhs[0], 0.0);
    const auto a1 = check_pointwise_vv(chi, Weight::line_power(-0.5), default_t_grid(chi, Weight::line_power(-0.5)));
    EXPECT_TRUE(a1.holds);
    EXPECT_EQ(a1.t.size(), 50u);
    EXPECT_THROW(check_pointwise_vv(chi, Weight::line_power(0.6), {1.0}), PreconditionError);
    const auto step = Weight::piecewise({-1, 1}, {1, 0, 1}, 0.0, Support::RealLine);
    EXPECT_THROW(check_pointwise_vv(chi, step, {1.0}), PreconditionError);
}

TEST(PointwiseVV, RhsClosedForm) {
    // P f* + Q f* for chi_(0,1), u = 1: 1 + log(1/t) below 1, 1/t above.
    const auto chi = SimpleFunction::indicator(0, 1);
    const std::vector<double> ts{0.01, 0.5, 1.0, 4.0};
    const auto rep = check_pointwise_vv(chi, kOne, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t = ts[i];
        EXPECT_NEAR(rep.rhs[i], t < 1 ? 1 + std::log(1 / t) : 1 / t, 1e-12);
    }
}

TEST(PointwiseVV, RandomUnitWeight) {
    detail::Rng rng(131);
    for (int i = 0; i < 5; ++i) {
        const auto f = oracle::random_function(rng);
        EXPECT_TRUE(check_pointwise_vv(f, kOne, default_t_grid(f, kOne)).holds);
    }
}

TEST(FitTrend, GrowthAndVerdict) {
    OperatorNormEstimate est;
    est.parameters = {1, 0.5, 0.25, 0.125, 0.0625};
    est.level_max = {1, 2.5, 6.25, 15.625, 39.0625};
    fit_trend(est);
    EXPECT_NEAR(est.trend, 2.5, 1e-12);
    EXPECT_NEAR(est.growth_exponent, std::log(2.5) / std::log(2.0), 1e-12);
    EXPECT_EQ(est.verdict, EstimateVerdict::UnboundedEvidence);

    OperatorNormEstimate flat;
    flat.parameters = {1, 0.5, 0.25, 0.125, 0.0625};
    flat.level_max = {1, 1.1, 1.05, 1.1, 1.1};
    fit_trend(flat);
    EXPECT_EQ(flat.verdict, EstimateVerdict::BoundedEvidence);
    EXPECT_GE(flat.trend, 0.0);

    OperatorNormEstimate short_run;
    short_run.parameters = {1, 0.5, 0.25};
    short_run.level_max = {1, 3, 9};
    fit_trend(short_run);
    EXPECT_EQ(short_run.verdict, EstimateVerdict::BoundedEvidence);

    EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
    EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(DilationRegression, PowerPairs) {
    for (auto [k, l, p] : {std::tuple{0.0, 0.0, 1.0}, {-0.5, 0.0, 1.0}, {0.6, 0.6, 3.0}, {-0.3, 0.5, 2.0}}) {
        const auto u = Weight::line_power(k), w = Weight::half_power(l);
        const double r0 = weak_type_ratio(SimpleFunction::indicator(-1, 1), u, w, p);
        for (double b : {1e-2, 1e-1, 1e1, 1e2})
            EXPECT_LT(oracle::rel_err(weak_type_ratio(SimpleFunction::indicator(-b, b), u, w, p), r0), 1e-3)
                << k << " " << l << " " << b;
    }
}

TEST(Scenario, ValidationRejectsMismatchedQ) {
    auto s = builtin_scenario("lpq-q-le-1");
    EXPECT_NO_THROW(detail::validate(s));
    s.w = Weight::half_power(0.0);
    EXPECT_THROW(detail::validate(s), DomainError);
    EXPECT_THROW(builtin_scenario("no-such-scenario"), UnsupportedInputError);
}

TEST(Scenario, Counterexample) {
    const auto r = run_scenario(builtin_scenario("counterexample-p2"));
    EXPECT_EQ(r.estimate.verdict, EstimateVerdict::UnboundedEvidence);
    EXPECT_NEAR(r.estimate.growth_exponent, 0.28, 0.05);
    EXPECT_TRUE(r.expectation_met);
    bool a2 = false, b2 = false, bstar = false;
    for (const auto& c : r.certifications) {
        if (c.class_name == "A_p") a2 = c.in();
        if (c.class_name == "B_p" || c.class_name == "B_p,inf") b2 = c.in();
        if (c.class_name == "B*_inf") bstar = c.in();
    }
    EXPECT_TRUE(a2 && b2 && bstar);
}

TEST(Scenario, WeakPositiveWithinTenTimesMedian) {
    const auto r = run_scenario(builtin_scenario("a1-weak-positive"));
    EXPECT_EQ(r.estimate.verdict, EstimateVerdict::BoundedEvidence);
    EXPECT_TRUE(r.expectation_met);
    EXPECT_LE(r.estimate.max_ratio, 10 * r.estimate.median_ratio);
    double mx = 0.0;
    for (const auto& [id, v] : r.estimate.ratios) mx = std::max(mx, v);
    EXPECT_EQ(mx, r.estimate.max_ratio);
}

TEST(Scenario, BuiltinNames) {
    const auto names = builtin_scenario_names();
    ASSERT_EQ(names.size(), 6u);
    for (const auto& n : names) EXPECT_EQ(builtin_scenario(n).name, n);
}
