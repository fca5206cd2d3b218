#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vdkernel/errors.hpp"
#include "vdkernel/quadrature.hpp"

using namespace vdkernel;
namespace frozen = vdkernel::testing::frozen;

TEST(IntegrateInterval, ExactOnPolynomialsAndSmoothFunctions) {
  const QuadConfig cfg;
  EXPECT_NEAR(integrate_interval([](double x) { return x * x * x; }, 0.0, 2.0, cfg).value, 4.0,
              1e-13);
  EXPECT_NEAR(integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, cfg)
                  .value,
              2.0, 1e-13);
  EXPECT_EQ(integrate_interval([](double) { return 1.0; }, 1.0, 1.0, cfg).value, 0.0);
}

TEST(IntegrateInterval, ErrorEstimateBoundsTheTrueError) {
  const QuadConfig cfg{1e-8, 1e-8, 4000, 10.0};
  const QuadResult r =
      integrate_interval([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg);
  EXPECT_LE(std::abs(r.value - 2.0 / 3.0), std::max(r.error_estimate, 1e-15));
  EXPECT_LE(r.error_estimate, 1e-8);
}

TEST(IntegrateInterval, Failures) {
  QuadConfig tight{1e-15, 1e-15, 8, 10.0};
  EXPECT_THROW(integrate_interval([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0,
                                  tight),
               Error);
  try {
    integrate_interval([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, QuadConfig{}, {}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NonFiniteF || e.code() == ErrorCode::NoConvergence);
  }
  EXPECT_THROW(integrate_interval([](double) { return NAN; }, 0.0, 1.0, QuadConfig{}), Error);
  QuadConfig bad;
  bad.abs_tol = 0.0;
  EXPECT_THROW(integrate_interval([](double x) { return x; }, 0.0, 1.0, bad), Error);
}

TEST(DampedOscillatory, FrozenValueAtTheOrigin) {
  const QuadResult r = damped_oscillatory_integral(1.0, 0.0, 0.0, 1.0, QuadConfig{});
  EXPECT_NEAR(r.value, frozen::kOscillatory_t1_x0_y0_g1, 1e-12);
  EXPECT_LE(r.error_estimate, 1e-10);
  EXPECT_GT(r.truncation_point, 0.0);
}

TEST(DampedOscillatory, TruncationPointMeetsItsBound) {
  for (double t : {0.01, 0.1, 1.0, 10.0}) {
    for (double tail : {1e-6, 1e-12, 1e-15}) {
      const double s = damped_truncation_point(t, tail);
      EXPECT_LE(2.0 * std::exp(-0.5 * s * s * t) / (s * t), tail);
      // Not wildly conservative: 10 % smaller would violate it.
      const double smaller = 0.9 * s;
      EXPECT_GT(2.0 * std::exp(-0.5 * smaller * smaller * t) / (smaller * t), tail);
    }
  }
}

TEST(DampedOscillatory, SymmetricInXAndY) {
  const QuadConfig cfg;
  for (double x : {0.0, 0.3, 2.0}) {
    for (double y : {0.0, 1.1, 4.0}) {
      EXPECT_NEAR(damped_oscillatory_integral(0.5, x, y, 1.2, cfg).value,
                  damped_oscillatory_integral(0.5, y, x, 1.2, cfg).value, 1e-12);
    }
  }
}

TEST(DampedOscillatory, AgreesWithBruteForceSimpson) {
  const double t = 0.7, x = 1.3, y = 0.4, g = 0.9;
  const auto f = [&](double s) {
    return std::exp(-0.5 * s * s * t) / (s * s + g * g) * (s * std::cos(s * x) - g * std::sin(s * x)) *
           (s * std::cos(s * y) - g * std::sin(s * y));
  };
  const double ref = vdkernel::testing::simpson(f, 0.0, 12.0, 1'000'000);
  EXPECT_NEAR(damped_oscillatory_integral(t, x, y, g, QuadConfig{}).value, ref, 1e-11);
}

TEST(HalflineWeighted, Moments) {
  for (double g : {0.5, 1.0, 2.0}) {
    const QuadConfig cfg;
    EXPECT_NEAR(integrate_halfline_weighted([](double) { return 1.0; }, g, cfg).value, 1.0, 1e-10);
    EXPECT_NEAR(integrate_halfline_weighted([](double u) { return u; }, g, cfg).value,
                1.0 / (2.0 * g), 1e-10);
    // Grows like the inverse weight for a while: exercised by the extension blocks.
    EXPECT_NEAR(integrate_halfline_weighted([g](double u) { return std::exp(1.5 * g * u); }, g,
                                            cfg)
                    .value,
                4.0, 1e-8);
  }
  EXPECT_THROW(integrate_halfline_weighted([](double u) { return std::exp(3.0 * u); }, 1.0,
                                           QuadConfig{}),
               Error);
}

TEST(EIntegrals, MassOfEIsTwoAndAxisymmetricReducesCorrectly) {
  const QuadConfig cfg;
  const auto one = [](double) { return 1.0; };
  EXPECT_NEAR(integrate_E_rotreduced(one, one, 1.0, cfg).value, 2.0, 1e-10);
  EXPECT_NEAR(integrate_E1_axisymmetric([](double, double) { return 1.0; }, 1.0, cfg).value, 1.0,
              1e-10);
  // Mean of c^2 over the sphere is 1/3; c alone averages to 0.
  EXPECT_NEAR(integrate_E1_axisymmetric([](double, double c) { return c * c; }, 0.7, cfg).value,
              1.0 / 3.0, 1e-10);
  EXPECT_NEAR(integrate_E1_axisymmetric([](double r, double c) { return c * r; }, 0.7, cfg).value,
              0.0, 1e-10);
}
