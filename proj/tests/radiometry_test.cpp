#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "patchant/radiometry.hpp"

using namespace patchant;

namespace {

constexpr double kPi = std::numbers::pi;

RadiationPattern isotropic(std::size_t nt = 361, std::size_t np = 720) {
    return RadiationPattern::sample([](double, double) { return 1.0; }, nt, np);
}

RadiationPattern sin_squared(std::size_t nt = 361, std::size_t np = 720) {
    return RadiationPattern::sample([](double t, double) { return std::sin(t) * std::sin(t); }, nt, np);
}

/// Unit intensity over the upper hemisphere; the horizon row carries the
/// mean of the one-sided limits.
RadiationPattern upper_hemisphere(std::size_t nt = 361, std::size_t np = 720) {
    const auto theta = theta_grid(nt);
    std::vector<double> v(nt * np, 0.0);
    for (std::size_t i = 0; i < nt; ++i) {
        const double value = 2 * i == nt - 1 ? 0.5 : (theta[i] < kPi / 2 ? 1.0 : 0.0);
        for (std::size_t j = 0; j < np; ++j) v[i * np + j] = value;
    }
    return RadiationPattern::from_samples(nt, np, std::move(v));
}

} // namespace

TEST(Grids, EndpointsAndMidpoints) {
    const auto theta = theta_grid(361);
    EXPECT_EQ(theta.front(), 0.0);
    EXPECT_EQ(theta.back(), kPi);
    const auto phi = phi_grid(4);
    EXPECT_DOUBLE_EQ(phi[0], kPi / 4);
    EXPECT_DOUBLE_EQ(phi[3], 7 * kPi / 4);
    EXPECT_THROW(theta_grid(1), DomainError);
    EXPECT_THROW(phi_grid(0), DomainError);
}

TEST(RadiationPattern, NormalizesToUnitPeak) {
    const auto p = RadiationPattern::from_samples(2, 2, {0.0, 2.0, 4.0, 1.0});
    EXPECT_EQ(p.at(1, 0), 1.0);
    EXPECT_EQ(p.at(0, 1), 0.5);
    EXPECT_THROW(RadiationPattern::from_samples(2, 2, {0, 0, 0, 0}), DegeneratePattern);
    EXPECT_THROW(RadiationPattern::from_samples(2, 2, {0, -1, 0, 1}), DomainError);
    EXPECT_THROW(RadiationPattern::from_samples(2, 2, {1, 1, 1}), DomainError);
}

TEST(PatternSolidAngle, Isotropic) {
    EXPECT_NEAR(pattern_solid_angle(isotropic()) / (4 * kPi), 1.0, 1e-9);
    EXPECT_NEAR(directivity(isotropic()), 1.0, 1e-9);
}

TEST(PatternSolidAngle, SinSquared) {
    EXPECT_NEAR(pattern_solid_angle(sin_squared()) / (8 * kPi / 3), 1.0, 1e-6);
    EXPECT_NEAR(directivity(sin_squared()), 1.5, 1e-6);
}

TEST(PatternSolidAngle, UpperHemisphere) {
    EXPECT_NEAR(pattern_solid_angle(upper_hemisphere()) / (2 * kPi), 1.0, 1e-4);
    EXPECT_NEAR(directivity(upper_hemisphere()), 2.0, 1e-4);
}

TEST(PatternSolidAngle, OddIntervalCountsUseClosingPanel) {
    // (1 + cos^2)/2 peaks at the poles, which every grid samples
    auto f = [](double t, double) { return 0.5 * (1.0 + std::cos(t) * std::cos(t)); };
    for (std::size_t nt : {4u, 5u, 362u, 721u, 722u}) {
        const double omega = pattern_solid_angle(RadiationPattern::sample(f, nt, 8));
        const double tol = nt < 10 ? 0.05 : 1e-8;
        EXPECT_NEAR(omega / (8 * kPi / 3), 1.0, tol) << nt;
    }
}

TEST(PatternSolidAngle, PeakOffGridLowersNormalization) {
    // sin^2 peaks at the horizon, which an even point count misses
    EXPECT_GT(pattern_solid_angle(sin_squared(362, 16)), 8 * kPi / 3);
}

TEST(PatternSolidAngle, PolesOnlyPatternIsDegenerate) {
    // non-zero only where sin(theta) vanishes
    std::vector<double> v(3 * 4, 0.0);
    v[0] = 1.0;
    EXPECT_THROW(pattern_solid_angle(RadiationPattern::from_samples(3, 4, v)), DegeneratePattern);
}

TEST(PatternSolidAngle, ConvergesForSmoothPatterns) {
    auto smooth = [](double t, double p) {
        const double s = std::sin(t);
        return std::pow(std::cos(t / 2), 4) * (1.2 + 0.5 * s * s * std::cos(2 * p)) + 0.05 * s * s;
    };
    const double coarse = pattern_solid_angle(RadiationPattern::sample(smooth, 361, 720));
    const double fine = pattern_solid_angle(RadiationPattern::sample(smooth, 721, 1440));
    EXPECT_LT(std::abs(coarse - fine) / fine, 1e-6);
}

TEST(Directivity, TimesSolidAngleIsFourPi) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        std::vector<double> v(37 * 24);
        for (double& x : v) x = u(rng);
        const auto p = RadiationPattern::from_samples(37, 24, v);
        EXPECT_NEAR(directivity(p) * pattern_solid_angle(p), 4 * kPi, 4 * kPi * 4e-16);
    }
}

TEST(Directivity, ScalingBeforeNormalizationIsInvisible) {
    auto raw = [](double t, double p) { return std::pow(std::cos(t / 2), 6) * (2 + std::sin(p)); };
    const double d = directivity(RadiationPattern::sample(raw, 181, 360));
    for (double k : {1e-9, 0.37, 4.0, 1e12}) {
        const double dk =
            directivity(RadiationPattern::sample([&](double t, double p) { return k * raw(t, p); }, 181, 360));
        EXPECT_NEAR(dk, d, d * 1e-14) << k;
    }
}

TEST(GainFromIntensity, Examples) {
    EXPECT_DOUBLE_EQ(gain_from_intensity(1.0, 4 * kPi), 1.0);
    EXPECT_EQ(gain_from_intensity(0.0, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(gain_from_intensity(3.0, 4 * kPi), 3.0);
    EXPECT_THROW(gain_from_intensity(1.0, 0.0), DomainError);
    EXPECT_THROW(gain_from_intensity(1.0, -1.0), DomainError);
}

TEST(RealizedGain, Examples) {
    EXPECT_EQ(realized_gain(1.5, 1.0), 1.5);
    EXPECT_EQ(realized_gain(2.0, 0.5), 1.0);
    EXPECT_EQ(realized_gain(7.3, 0.0), 0.0);
    EXPECT_THROW(realized_gain(1.0, 1.01), DomainError);
    EXPECT_THROW(realized_gain(1.0, -0.1), DomainError);
}

TEST(RealizedGain, RatioToDirectivityIsEfficiency) {
    const double d = directivity(sin_squared(181, 360));
    for (double e0 : {0.0, 0.125, 0.5, 0.75, 1.0}) EXPECT_EQ(realized_gain(d, e0) / d, e0);
}

TEST(RadiationEfficiency, Examples) {
    EXPECT_EQ(radiation_efficiency(1.0, 1.0), 1.0);
    EXPECT_EQ(radiation_efficiency(0.5, 1.0), 0.5);
    EXPECT_EQ(radiation_efficiency(0.0, 1.0), 0.0);
    EXPECT_THROW(radiation_efficiency(1.1, 1.0), DomainError);
    EXPECT_THROW(radiation_efficiency(0.5, 0.0), DomainError);
}

TEST(InputImpedance, SumsResistances) {
    EXPECT_EQ(input_impedance({0.0005, 50, 0, 0}), (Impedance{50, 0}));
    EXPECT_EQ(input_impedance({0.0005, 45, 5, 10}), (Impedance{50, 10}));
    EXPECT_EQ(input_impedance({0, 0, 0, 0}), (Impedance{0, 0}));
}

TEST(ReflectionCoefficient, Examples) {
    EXPECT_EQ(reflection_coefficient({50, 0}, 50), std::complex<double>(0, 0));
    EXPECT_EQ(reflection_coefficient({0, 0}, 50), std::complex<double>(-1, 0));
    const auto g = reflection_coefficient({100, 0}, 50);
    EXPECT_NEAR(g.real(), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(g.imag(), 0.0);
    EXPECT_THROW(reflection_coefficient({-50, 0}, 50), SingularityError);
    EXPECT_THROW(reflection_coefficient({50, 0}, 0), DomainError);
}

TEST(ReflectionCoefficient, PassiveLoadsNeverExceedUnity) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> r(0.0, 1e4), x(-1e4, 1e4), z0(1.0, 600.0);
    for (int i = 0; i < 100000; ++i) {
        const Impedance z{r(rng), x(rng)};
        const auto g = reflection_coefficient(z, z0(rng));
        ASSERT_LE(std::abs(g), 1.0 + 1e-15);
        const auto e = efficiency_chain(std::abs(g) > 1.0 ? g / std::abs(g) : g, 1.0, 1.0);
        ASSERT_GE(e.reflection, 0.0);
        ASSERT_LE(e.reflection, 1.0);
    }
}

TEST(EfficiencyChain, Examples) {
    const auto matched = efficiency_chain(0.0, 1.0, 1.0);
    EXPECT_EQ(matched.reflection, 1.0);
    EXPECT_EQ(matched.total, 1.0);

    const auto third = efficiency_chain(1.0 / 3.0, 1.0, 1.0);
    EXPECT_NEAR(third.reflection, 8.0 / 9.0, 1e-12);
    EXPECT_NEAR(third.total, 8.0 / 9.0, 1e-12);

    // exact product 8/9 * 0.95 * 0.99
    EXPECT_NEAR(efficiency_chain(1.0 / 3.0, 0.95, 0.99).total, 0.836, 1e-12);
    EXPECT_THROW(efficiency_chain({0.8, 0.8}, 1.0, 1.0), DomainError);
    EXPECT_THROW(efficiency_chain(0.0, 1.2, 1.0), DomainError);
}

TEST(EfficiencyChain, TotalIsExactProduct) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0), ang(-kPi, kPi);
    for (int i = 0; i < 10000; ++i) {
        const auto g = std::polar(u(rng), ang(rng));
        const double ec = u(rng), ed = u(rng);
        const auto e = efficiency_chain(g, ec, ed);
        ASSERT_EQ(e.total, e.reflection * ec * ed);
        ASSERT_EQ(e.reflection, 1.0 - std::norm(g));
    }
}

TEST(EfficiencyChain, MismatchEfficiencyDecreasesWithGammaMagnitude) {
    double prev = efficiency_chain(0.0, 1.0, 1.0).reflection;
    for (int k = 1; k <= 1000; ++k) {
        const double er = efficiency_chain(k / 1000.0, 1.0, 1.0).reflection;
        ASSERT_LT(er, prev);
        prev = er;
    }
}

TEST(ToDbi, Examples) {
    EXPECT_EQ(to_dbi(1.0), 0.0);
    EXPECT_NEAR(to_dbi(1.5), 1.7609, 1e-4);
    EXPECT_EQ(to_dbi(0.0), -120.0);
    EXPECT_EQ(to_dbi(1e-30), -120.0);
    EXPECT_THROW(to_dbi(-1e-9), DomainError);
}
