#include "vdkernel/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vdkernel/errors.hpp"

namespace vdkernel {

std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::Comp3D: return "E1";
    case Component::Comp1D: return "E2";
    case Component::Origin: return "O";
  }
  return "?";
}

std::string_view to_string(MeasureTag m) noexcept {
  switch (m) {
    case MeasureTag::MGamma: return "MGamma";
    case MeasureTag::MTilde: return "MTilde";
    case MeasureTag::MPlus: return "MPlus";
    case MeasureTag::Lebesgue: return "Lebesgue";
  }
  return "?";
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::SingularWeight: return "SingularWeight";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonFiniteF: return "NonFiniteF";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::ResourceGuard: return "ResourceGuard";
    case ErrorCode::ClockOverflow: return "ClockOverflow";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::UnsortedEdges: return "UnsortedEdges";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
  }
  return "Unknown";
}

namespace {

double norm3(const Vec3& v) noexcept { return std::hypot(v[0], v[1], v[2]); }

}  // namespace

EPoint EPoint::in3d(const Vec3& coords) {
  for (double c : coords) {
    require(std::isfinite(c), ErrorCode::InvalidInput, "3D coordinates must be finite");
  }
  const double r = norm3(coords);
  require(r >= kMinRadius, ErrorCode::InvalidInput,
          "3D point has radius below 1e-300; use EPoint::origin()");
  EPoint p;
  p.component_ = Component::Comp3D;
  p.coords3_ = coords;
  p.radius_ = r;
  return p;
}

EPoint EPoint::in1d(double u) {
  require(std::isfinite(u), ErrorCode::InvalidInput, "half-line coordinate must be finite");
  require(u >= kMinRadius, ErrorCode::InvalidInput,
          "half-line coordinate must be >= 1e-300; use EPoint::origin() for zero");
  EPoint p;
  p.component_ = Component::Comp1D;
  p.coord1_ = u;
  p.radius_ = u;
  return p;
}

EPoint EPoint::in3d_radial(double radius, const Vec3& direction) {
  const double n = norm3(direction);
  require(n > 0.0 && std::isfinite(n), ErrorCode::InvalidInput, "direction must be nonzero");
  EPoint p = in3d(Vec3{radius * (direction[0] / n), radius * (direction[1] / n),
                       radius * (direction[2] / n)});
  // Keep the requested radius exactly; the hypot of the scaled vector can be
  // off by an ulp.
  p.radius_ = radius;
  return p;
}

EPoint EPoint::from_signed_radial(double y, const Vec3& direction) {
  if (y > 0.0) return in3d_radial(y, direction);
  if (y < 0.0) return in1d(-y);
  return origin();
}

const Vec3& EPoint::coords3() const {
  require(component_ == Component::Comp3D, ErrorCode::InvalidInput, "point is not in the 3D part");
  return coords3_;
}

double EPoint::coord1() const {
  require(component_ == Component::Comp1D, ErrorCode::InvalidInput,
          "point is not on the half-line");
  return coord1_;
}

double distance(const EPoint& a, const EPoint& b) noexcept {
  if (a.component() == Component::Comp3D && b.component() == Component::Comp3D) {
    const Vec3& u = a.coords3();
    const Vec3& v = b.coords3();
    return std::hypot(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
  }
  if (a.component() == Component::Comp1D && b.component() == Component::Comp1D) {
    return std::abs(a.coord1() - b.coord1());
  }
  // Across components, or with the origin on either side.
  return a.radius() + b.radius();
}

double signed_radial(const EPoint& a) noexcept {
  switch (a.component()) {
    case Component::Comp3D: return a.radius();
    case Component::Comp1D: return -a.radius();
    case Component::Origin: return 0.0;
  }
  return 0.0;
}

bool canonical_less(const EPoint& a, const EPoint& b) noexcept {
  const auto rank = [](Component c) {
    switch (c) {
      case Component::Origin: return 0;
      case Component::Comp1D: return 1;
      case Component::Comp3D: return 2;
    }
    return 3;
  };
  if (a.component() != b.component()) return rank(a.component()) < rank(b.component());
  switch (a.component()) {
    case Component::Origin: return false;
    case Component::Comp1D: return a.coord1() < b.coord1();
    case Component::Comp3D: return a.coords3() < b.coords3();
  }
  return false;
}

KernelParams::KernelParams(double gamma) : gamma_(gamma) {
  require(std::isfinite(gamma) && gamma > 0.0, ErrorCode::InvalidInput,
          "gamma must be finite and strictly positive, got " + std::to_string(gamma));
}

double KernelParams::psi(double r) const noexcept {
  return std::sqrt(gamma_ / (2.0 * std::numbers::pi)) * std::exp(-gamma_ * r) / r;
}

double KernelParams::phi(double u) const noexcept {
  return std::sqrt(2.0 * gamma_) * std::exp(-gamma_ * u);
}

double KernelParams::h(const EPoint& y) const {
  switch (y.component()) {
    case Component::Comp3D: return psi(y.radius());
    case Component::Comp1D: return phi(y.radius());
    case Component::Origin: break;
  }
  throw Error(ErrorCode::SingularWeight, "h_gamma is not defined at the origin");
}

double KernelParams::scale(double u) const noexcept {
  return std::exp(2.0 * gamma_ * u) / (4.0 * gamma_ * gamma_);
}

double KernelParams::speed_density(double u) const noexcept {
  return 2.0 * gamma_ * std::exp(-2.0 * gamma_ * u);
}

double KernelParams::line_weight(double y) const noexcept { return speed_density(std::abs(y)); }

double measure_weight(const EPoint& y, MeasureTag tag, const KernelParams& params) {
  switch (tag) {
    case MeasureTag::Lebesgue: return 1.0;
    case MeasureTag::MTilde:
    case MeasureTag::MPlus: return params.line_weight(y.radius());
    case MeasureTag::MGamma: {
      if (y.is_origin()) {
        throw Error(ErrorCode::SingularWeight, "m_gamma has no Lebesgue density at the origin");
      }
      const double h = params.h(y);
      return h * h;
    }
  }
  throw Error(ErrorCode::UnsupportedPair, "unknown measure tag");
}

double convert_density(double value, const EPoint& y, MeasureTag from, MeasureTag to,
                       const KernelParams& params) {
  if (from == to) return value;
  if (from != MeasureTag::Lebesgue && to != MeasureTag::Lebesgue) {
    throw Error(ErrorCode::UnsupportedPair,
                std::string("cannot convert ") + std::string(to_string(from)) + " -> " +
                    std::string(to_string(to)) + " directly");
  }
  if (from == MeasureTag::Lebesgue) return value / measure_weight(y, to, params);
  return value * measure_weight(y, from, params);
}

double interval_measure(double a, double b, MeasureTag tag, const KernelParams& params) {
  require(a <= b, ErrorCode::InvalidInput, "interval bounds out of order");
  const double g2 = 2.0 * params.gamma();
  // Mass of [lo, hi] with lo >= 0 under 2 gamma exp(-2 gamma u) du.
  const auto half = [g2](double lo, double hi) {
    return std::exp(-g2 * lo) * -std::expm1(-g2 * (hi - lo));
  };
  switch (tag) {
    case MeasureTag::Lebesgue: return b - a;
    case MeasureTag::MPlus:
    case MeasureTag::MGamma:
      require(a >= 0.0, ErrorCode::InvalidInput, "radial interval must lie in [0, inf)");
      if (std::isinf(b)) return std::exp(-g2 * a);
      return half(a, b);
    case MeasureTag::MTilde:
      if (a >= 0.0) return std::isinf(b) ? std::exp(-g2 * a) : half(a, b);
      if (b <= 0.0) return std::isinf(a) ? std::exp(g2 * b) : half(-b, -a);
      return (std::isinf(a) ? 1.0 : half(0.0, -a)) + (std::isinf(b) ? 1.0 : half(0.0, b));
  }
  return 0.0;
}

}  // namespace vdkernel
