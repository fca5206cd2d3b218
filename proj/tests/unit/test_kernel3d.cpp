#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "vdkernel/errors.hpp"
#include "vdkernel/kernel3d.hpp"
#include "vdkernel/kernels1d.hpp"

using namespace vdkernel;
using vdkernel::testing::Gen;
namespace frozen = vdkernel::testing::frozen;

namespace {

double gaussian3(double t, const EPoint& x, const EPoint& y) {
  const Vec3& a = x.coords3();
  const Vec3& b = y.coords3();
  const double d2 = (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                    (a[2] - b[2]) * (a[2] - b[2]);
  return std::pow(2.0 * std::numbers::pi * t, -1.5) * std::exp(-d2 / (2.0 * t));
}

}  // namespace

TEST(KilledKernel3D, FrozenValue) {
  const EPoint x = EPoint::in3d(1.0, 0.0, 0.0);
  EXPECT_NEAR(killed_kernel3d(1.0, x, x, KernelParams(1.0)), frozen::kKilled3d_t1_r1_same_g1,
              1e-13);
}

TEST(KilledKernel3D, IsTheHTransformOfTheGaussian) {
  Gen gen(31);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double t = gen.log_uniform(0.05, 5.0), g = gen.log_uniform(0.3, 3.0);
    const KernelParams p(g);
    const EPoint x = gen.point3d(0.1, 3.0), y = gen.point3d(0.1, 3.0);
    const double want = gaussian3(t, x, y) * std::exp(-0.5 * g * g * t) /
                        (p.psi(x.radius()) * p.psi(y.radius()));
    const double got = killed_kernel3d(t, x, y, p);
    worst = std::max(worst, std::abs(got - want) / want);
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(KilledKernel3D, SymmetricAndPositive) {
  Gen gen(32);
  const KernelParams p(1.2);
  for (int i = 0; i < 200; ++i) {
    const EPoint x = gen.point3d(), y = gen.point3d();
    const double t = gen.log_uniform(0.01, 10.0);
    EXPECT_EQ(killed_kernel3d(t, x, y, p), killed_kernel3d(t, y, x, p));
    EXPECT_GE(killed_kernel3d(t, x, y, p), 0.0);
  }
  EXPECT_THROW(killed_kernel3d(1.0, EPoint::in1d(1.0), EPoint::in3d(1, 0, 0), p), Error);
  EXPECT_THROW(killed_kernel3d(0.0, EPoint::in3d(1, 0, 0), EPoint::in3d(1, 0, 0), p), Error);
}

TEST(Survival3D, EqualsTheRadialTailOfTheInverseGaussian) {
  for (double g : {0.5, 1.0, 2.0}) {
    const KernelParams p(g);
    for (double t : {0.1, 1.0, 10.0}) {
      for (double r : {0.3, 1.0, 2.0}) {
        const EPoint x = EPoint::in3d(0.0, r, 0.0);
        const QuadResult s = survival_probability_3d(t, x, p, QuadConfig{1e-10, 1e-10, 4000, 10});
        EXPECT_NEAR(s.value, 1.0 - first_passage_cdf(t, r, p), 1e-6) << g << ' ' << t << ' ' << r;
      }
    }
  }
}

TEST(Survival3D, Limits) {
  const KernelParams p(1.0);
  const EPoint x = EPoint::in3d(1.0, 0.0, 0.0);
  EXPECT_NEAR(survival_probability_3d(1e-3, x, p, QuadConfig{}).value, 1.0, 1e-6);
  EXPECT_NEAR(survival_probability_3d(60.0, x, p, QuadConfig{}).value, 0.0, 1e-6);
}

TEST(PointOnCone, HasRequestedRadiusAndAngle) {
  Gen gen(33);
  for (int i = 0; i < 100; ++i) {
    const EPoint axis = gen.point3d();
    const double r = gen.uniform(0.1, 3.0), c = gen.uniform(-1.0, 1.0);
    const EPoint q = point_on_cone(axis, r, c);
    EXPECT_NEAR(q.radius(), r, 1e-13);
    const Vec3& a = axis.coords3();
    const Vec3& b = q.coords3();
    const double cos = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) / (axis.radius() * r);
    EXPECT_NEAR(cos, c, 1e-12);
    const Vec3 o = orthogonal_unit(a);
    EXPECT_NEAR(o[0] * a[0] + o[1] * a[1] + o[2] * a[2], 0.0, 1e-12);
    EXPECT_NEAR(std::hypot(o[0], o[1], o[2]), 1.0, 1e-14);
  }
}
