#pragma once

#include <array>
#include <string_view>

namespace vdkernel {

using Vec3 = std::array<double, 3>;

/// Radii below this are rejected at construction; the zero point of E is
/// only reachable through EPoint::origin().
inline constexpr double kMinRadius = 1e-300;

enum class Component { Comp3D, Comp1D, Origin };

std::string_view to_string(Component c) noexcept;

/// A point of the glued space E: a copy of R^3 and a half-line [0, inf)
/// sharing a single origin. The representation is canonical: the origin is
/// a dedicated tag and never a zero coordinate in either component.
class EPoint {
 public:
  static EPoint origin() noexcept { return EPoint{}; }
  static EPoint in3d(const Vec3& coords);
  static EPoint in3d(double x, double y, double z) { return in3d(Vec3{x, y, z}); }
  static EPoint in1d(double u);

  /// Point at the given radius along `direction` in the 3D part. `direction`
  /// need not be normalised but must be nonzero.
  static EPoint in3d_radial(double radius, const Vec3& direction);

  /// Inverse of signed_radial: positive values go to the 3D component along
  /// `direction`, negative values to the half-line.
  static EPoint from_signed_radial(double y, const Vec3& direction = {0.0, 0.0, 1.0});

  Component component() const noexcept { return component_; }
  bool is_origin() const noexcept { return component_ == Component::Origin; }

  /// Cartesian coordinates in the 3D part; throws unless component is Comp3D.
  const Vec3& coords3() const;
  /// Coordinate on the half-line; throws unless component is Comp1D.
  double coord1() const;

  double radius() const noexcept { return radius_; }

  friend bool operator==(const EPoint&, const EPoint&) = default;

 private:
  EPoint() = default;

  Component component_ = Component::Origin;
  Vec3 coords3_{0.0, 0.0, 0.0};
  double coord1_ = 0.0;
  double radius_ = 0.0;
};

/// Euclidean within one component; sum of radii across components.
double distance(const EPoint& a, const EPoint& b) noexcept;

/// +|a| on the 3D part, -|a| on the half-line, 0 at the origin.
double signed_radial(const EPoint& a) noexcept;

/// Strict weak order used to canonicalise kernel arguments.
bool canonical_less(const EPoint& a, const EPoint& b) noexcept;

enum class MeasureTag {
  MGamma,    ///< m_gamma on E
  MTilde,    ///< 2 gamma exp(-2 gamma |x|) dx on the real line (mass 2)
  MPlus,     ///< 2 gamma exp(-2 gamma u) du on [0, inf) (mass 1)
  Lebesgue,
};

std::string_view to_string(MeasureTag m) noexcept;

/// Distortion parameter gamma together with the weight functions it induces.
class KernelParams {
 public:
  explicit KernelParams(double gamma);

  double gamma() const noexcept { return gamma_; }

  /// psi_gamma at radius r > 0: sqrt(gamma / 2 pi) exp(-gamma r) / r.
  double psi(double r) const noexcept;
  /// phi_gamma(u) = sqrt(2 gamma) exp(-gamma u).
  double phi(double u) const noexcept;
  /// h_gamma: psi on the 3D part, phi on the half-line. Throws
  /// SingularWeight at the origin.
  double h(const EPoint& y) const;

  /// Scale function exp(2 gamma u) / (4 gamma^2) of the radial diffusion.
  double scale(double u) const noexcept;
  /// Speed density 2 gamma exp(-2 gamma u); also the radial density of
  /// m_gamma on either component and of m^(+).
  double speed_density(double u) const noexcept;

  /// 2 gamma exp(-2 gamma |y|), the Lebesgue density of m-tilde.
  double line_weight(double y) const noexcept;

 private:
  double gamma_;
};

/// Lebesgue density of `tag` at `y` (the Radon-Nikodym weight). For the line
/// measures the coordinate is radius(y). Throws SingularWeight for MGamma at
/// the origin.
double measure_weight(const EPoint& y, MeasureTag tag, const KernelParams& params);

/// Re-expresses a density at `y` with respect to a different reference
/// measure. Supported: identity, and Lebesgue <-> any of MGamma, MTilde,
/// MPlus.
double convert_density(double value, const EPoint& y, MeasureTag from, MeasureTag to,
                       const KernelParams& params);

/// Mass that `tag` assigns to the radial shell [a, b] of one component (or,
/// for MTilde / Lebesgue, to the interval [a, b] of the line).
double interval_measure(double a, double b, MeasureTag tag, const KernelParams& params);

}  // namespace vdkernel
