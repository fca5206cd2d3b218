#include "vdkernel/kernel3d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "vdkernel/errors.hpp"

namespace vdkernel {

double killed_kernel3d(double t, const EPoint& x, const EPoint& y, const KernelParams& params) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be finite and > 0");
  require(x.component() == Component::Comp3D && y.component() == Component::Comp3D,
          ErrorCode::InvalidInput, "killed 3D kernel needs both points in the 3D part");
  const double g = params.gamma();
  const double rx = x.radius();
  const double ry = y.radius();
  const double d = distance(x, y);
  // 1 / (psi(x) psi(y)) = (2 pi / g) rx ry e^{g (rx + ry)}; fold all
  // exponentials together.
  const double exponent = g * (rx + ry) - 0.5 * g * g * t - d * d / (2.0 * t);
  const double norm = std::pow(2.0 * std::numbers::pi * t, -1.5) * (2.0 * std::numbers::pi / g);
  return norm * (rx * ry) * std::exp(exponent);
}

Vec3 orthogonal_unit(const Vec3& v) {
  // Cross with the coordinate axis least aligned with v.
  const std::array<double, 3> a{std::abs(v[0]), std::abs(v[1]), std::abs(v[2])};
  Vec3 e{0.0, 0.0, 0.0};
  e[static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin())] = 1.0;
  Vec3 w{v[1] * e[2] - v[2] * e[1], v[2] * e[0] - v[0] * e[2], v[0] * e[1] - v[1] * e[0]};
  const double n = std::hypot(w[0], w[1], w[2]);
  require(n > 0.0, ErrorCode::InvalidInput, "cannot build an orthogonal vector to zero");
  return Vec3{w[0] / n, w[1] / n, w[2] / n};
}

EPoint point_on_cone(const EPoint& axis, double r, double c) {
  const Vec3& a = axis.coords3();
  const double n = axis.radius();
  const Vec3 u{a[0] / n, a[1] / n, a[2] / n};
  const Vec3 w = orthogonal_unit(u);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return EPoint::in3d_radial(r, Vec3{c * u[0] + s * w[0], c * u[1] + s * w[1], c * u[2] + s * w[2]});
}

QuadResult survival_probability_3d(double t, const EPoint& x, const KernelParams& params,
                                   const QuadConfig& cfg) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be finite and > 0");
  require(x.component() == Component::Comp3D, ErrorCode::InvalidInput,
          "survival_probability_3d needs a start in the 3D part");
  const double rx = x.radius();
  const double spread = std::sqrt(t);
  const std::array<double, 5> breaks{std::max(0.0, rx - 4.0 * spread), std::max(0.0, rx - spread),
                                     rx, rx + spread, rx + 4.0 * spread};
  const Integrand2 g = [&](double r, double c) {
    if (r <= kMinRadius) return 0.0;
    return killed_kernel3d(t, x, point_on_cone(x, r, c), params);
  };
  return integrate_E1_axisymmetric(g, params.gamma(), cfg, breaks);
}

}  // namespace vdkernel
