#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "ssrr/errors.hpp"
#include "ssrr/polar.hpp"

using namespace ssrr;

namespace {

UpstreamData golden_upstream(double gamma = 2.0) { return UpstreamData(GasModel(gamma), 1.0, {3.0, 0.0}); }
const Vec2 kXi{1.0, 0.0};

}  // namespace

TEST(Polar, PseudoSubsonicUpstreamHasNoPolar) {
    const UpstreamData up(GasModel(2.0), 1.0, {1.2, 0.0});
    EXPECT_THROW(polar_trace(up, {0, 0}, 32), NoPolarError);
}

TEST(Polar, NormalPointIsGoldenShock) {
    const Polar p = polar_trace(golden_upstream(), kXi, 128);
    EXPECT_NEAR(p.mach_max, std::sqrt(2.0), 1e-15);
    const PolarSample& n = p.normal_point();
    EXPECT_EQ(n.mach_n, p.mach_max);
    EXPECT_NEAR(n.shock.v_d.x, std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(n.shock.v_d.y, 0.0, 1e-15);
    EXPECT_NEAR(n.shock.rho_d, oracle::kGolden, 1e-12);
    EXPECT_EQ(n.type.label, ShockTypeLabel::strong);
}

TEST(Polar, SamplesSatisfyShockCondition) {
    for (double gamma : {1.0, 1.4, 2.0, 3.0}) {
        const Polar p = polar_trace(golden_upstream(gamma), kXi, 200);
        ASSERT_EQ(p.samples.size(), 400u);
        for (const auto& s : p.samples) {
            EXPECT_LT(std::abs(g_eval(p.upstream, s.shock.v_d, p.xi)), 1e-10);
            EXPECT_TRUE(admissible(s.shock));
            EXPECT_GT(s.mach_n, 1.0);
            EXPECT_LE(s.mach_n, p.mach_max);
        }
    }
}

TEST(Polar, EndpointsVanishInStrength) {
    const UpstreamData up = golden_upstream();
    const auto s = polar_shock(up, kXi, 1.0 + 1e-9, Side::plus);
    EXPECT_LT(norm(s.v_d - up.v()), 1e-6);
    EXPECT_NEAR(s.rho_d, 1.0, 1e-6);
}

TEST(Polar, MirrorSymmetry) {
    const Polar p = polar_trace(golden_upstream(1.4), kXi, 64);
    const std::size_t n = p.samples_per_side();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& m = p.samples[k];
        const auto& q = p.samples[n + k];
        EXPECT_EQ(m.side, Side::minus);
        EXPECT_EQ(q.side, Side::plus);
        EXPECT_NEAR(m.shock.zt(), -q.shock.zt(), 1e-12);
        EXPECT_NEAR(m.tau, -q.tau, 1e-12);
        EXPECT_NEAR(m.shock.rho_d, q.shock.rho_d, 1e-12);
        EXPECT_GE(q.shock.zt(), 0.0);
        EXPECT_GE(q.tau, 0.0);
    }
}

TEST(Polar, DensityIncreasesAlongBranch) {
    const Polar p = polar_trace(golden_upstream(3.0), kXi, 128);
    const std::size_t n = p.samples_per_side();
    for (std::size_t k = n + 1; k < 2 * n; ++k) {
        EXPECT_GT(p.samples[k].shock.rho_d, p.samples[k - 1].shock.rho_d);
    }
}

TEST(Polar, TurningAngleHasUniqueInteriorMaximum) {
    const Polar p = polar_trace(golden_upstream(), kXi, 256);
    const std::size_t n = p.samples_per_side();
    int rises = 0, falls = 0, changes = 0;
    int dir = 0;
    for (std::size_t k = n + 1; k < 2 * n; ++k) {
        const double d = p.samples[k].tau - p.samples[k - 1].tau;
        const int nd = d > 0 ? 1 : -1;
        (nd > 0 ? rises : falls)++;
        if (dir != 0 && nd != dir) ++changes;
        dir = nd;
    }
    EXPECT_EQ(changes, 1);
    EXPECT_GT(rises, 0);
    EXPECT_GT(falls, 0);
    EXPECT_GT(p.critical_mach, 1.0);
    EXPECT_LT(p.critical_mach, p.mach_max);
    for (const auto& s : p.samples) EXPECT_LE(std::abs(s.tau), p.tau_max + 1e-14);
}

TEST(Polar, SonicPointBetweenEndpoints) {
    const Polar p = polar_trace(golden_upstream(1.4), kXi, 128);
    ASSERT_TRUE(p.sonic_mach.has_value());
    const auto s = polar_shock(p.upstream, p.xi, *p.sonic_mach, Side::plus);
    EXPECT_NEAR(s.mach_d(), 1.0, 1e-10);
    // The critical (maximal turning) point lies beyond the sonic point.
    EXPECT_GT(p.critical_mach, *p.sonic_mach);
}

TEST(Polar, ParallelTraceMatchesSerialBitwise) {
    const UpstreamData up = golden_upstream(1.4);
    const Polar a = polar_trace_serial(up, kXi, 97);
    for (int jobs : {1, 2, 4}) {
        const Polar b = polar_trace(up, kXi, 97, jobs);
        ASSERT_EQ(a.samples.size(), b.samples.size());
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            EXPECT_EQ(a.samples[i].shock.v_d, b.samples[i].shock.v_d);
            EXPECT_EQ(a.samples[i].type.indicator, b.samples[i].type.indicator);
        }
        EXPECT_EQ(a.critical_mach, b.critical_mach);
        EXPECT_EQ(a.tau_max, b.tau_max);
    }
}

TEST(ClassifyType, NormalPointIsStrongAndNearZeroStrengthIsWeak) {
    const UpstreamData up = golden_upstream();
    const auto normal = polar_shock(up, kXi, std::sqrt(2.0), Side::plus);
    const ShockType nt = classify_type(up, normal);
    EXPECT_GT(nt.indicator, 0.0);
    EXPECT_EQ(nt.label, ShockTypeLabel::strong);
    const auto faint = polar_shock(up, kXi, 1.0 + 1e-3, Side::plus);
    EXPECT_EQ(classify_type(up, faint).label, ShockTypeLabel::weak);
}

TEST(ClassifyType, CriticalPointByIndicatorBisection) {
    const Polar p = polar_trace(golden_upstream(), kXi, 64);
    const auto s = polar_shock(p.upstream, p.xi, p.critical_mach, Side::plus);
    EXPECT_EQ(classify_type(p.upstream, s).label, ShockTypeLabel::critical);
}

TEST(ClassifyType, ZeroStrengthIsDegenerate) {
    const UpstreamData up = golden_upstream();
    const ShockPoint zero{up, kXi, {1, 0}, 1.0, up.v()};
    EXPECT_THROW(classify_type(up, zero), DegenerateShockError);
}

TEST(Convexity, SingleSignedForTestedGases) {
    for (double gamma : {1.0, 1.4, 2.0, 3.0, 4.0}) {
        const UpstreamData up(GasModel(gamma), 1.0, {gamma < 4.0 ? 3.0 : 4.5, 0.0});
        const Polar p = polar_trace(up, kXi, 180);
        const auto report = convexity_report(p);
        EXPECT_TRUE(report.single_signed) << "gamma=" << gamma;
        EXPECT_EQ(report.curvature.size(), 2 * 180 - 3);
    }
}

TEST(Convexity, TooFewSamplesRejected) {
    const Polar p = polar_trace(golden_upstream(), kXi, 2);
    EXPECT_THROW(convexity_report(p), DomainError);
}

TEST(SolveDeflection, ZeroDeflectionGivesOnlyNormalPoint) {
    const Polar p = polar_trace(golden_upstream(), kXi, 128);
    const auto roots = solve_deflection(p, 0.0);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_NEAR(roots[0].shock.v_d.x, std::sqrt(5.0), 1e-12);
    EXPECT_EQ(roots[0].type.label, ShockTypeLabel::strong);
}

TEST(SolveDeflection, TwoRootsBelowMaximumTurning) {
    const Polar p = polar_trace(golden_upstream(1.4), kXi, 128);
    for (double frac : {1e-6, 0.01, 0.3, 0.7, 0.999}) {
        for (double sign : {1.0, -1.0}) {
            const double tau = sign * frac * p.tau_max;
            const auto roots = solve_deflection(p, tau);
            ASSERT_EQ(roots.size(), 2u) << frac;
            EXPECT_EQ(roots[0].type.label, ShockTypeLabel::weak);
            EXPECT_EQ(roots[1].type.label, ShockTypeLabel::strong);
            EXPECT_GT(roots[1].shock.rho_d, roots[0].shock.rho_d);
            for (const auto& r : roots) {
                EXPECT_NEAR(r.tau, tau, 1e-12);
                EXPECT_LT(std::abs(g_eval(p.upstream, r.shock.v_d, p.xi)), 1e-10);
            }
        }
    }
}

TEST(SolveDeflection, CriticalAndDetached) {
    const Polar p = polar_trace(golden_upstream(), kXi, 128);
    const auto crit = solve_deflection(p, p.tau_max);
    ASSERT_EQ(crit.size(), 1u);
    EXPECT_EQ(crit[0].type.label, ShockTypeLabel::critical);
    EXPECT_TRUE(solve_deflection(p, p.tau_max * (1 + 1e-6)).empty());
    EXPECT_TRUE(solve_deflection(p, -1.1 * p.tau_max).empty());
}
