#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>

#include "vdkernel/geometry.hpp"

namespace vdkernel::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng_); }
  // Log-uniform on [a, b], a > 0.
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }

  Vec3 direction() {
    std::normal_distribution<double> n;
    for (;;) {
      const Vec3 v{n(eng_), n(eng_), n(eng_)};
      const double r = std::hypot(v[0], v[1], v[2]);
      if (r > 1e-6) return Vec3{v[0] / r, v[1] / r, v[2] / r};
    }
  }

  EPoint point3d(double rmin = 0.05, double rmax = 4.0) {
    return EPoint::in3d_radial(uniform(rmin, rmax), direction());
  }
  EPoint point1d(double rmin = 0.05, double rmax = 4.0) { return EPoint::in1d(uniform(rmin, rmax)); }

  // Any component, the origin with probability 1/7.
  EPoint point() {
    const int k = integer(0, 6);
    if (k == 0) return EPoint::origin();
    return k <= 3 ? point3d() : point1d();
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vdkernel::testing
