#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace vdkernel {

struct QuadConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  std::size_t max_panels = 4000;
  /// The neglected tail of a truncated integral is bounded by
  /// abs_tol / truncation_safety.
  double truncation_safety = 10.0;

  /// Throws InvalidInput unless abs_tol > 0, rel_tol > 0, max_panels >= 8
  /// and truncation_safety >= 1.
  void validate() const;

  /// Copy with both tolerances scaled by `factor`.
  QuadConfig tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  /// Upper limit actually integrated to (the finite endpoint for bounded
  /// domains).
  double truncation_point = 0.0;
  std::size_t panels_used = 0;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

/// Globally adaptive Gauss-Kronrod (21-point) integration of f over [a, b].
/// `breakpoints` inside (a, b) start the panel partition; at least
/// `initial_panels` equal panels are used in addition. Throws NoConvergence
/// when max_panels is exhausted, NonFiniteF when f is not finite.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadConfig& cfg,
                              std::span<const double> breakpoints = {},
                              std::size_t initial_panels = 1);

/// I(t, x, y) = int_0^inf exp(-s^2 t/2) / (s^2 + gamma^2)
///              * [s cos(sx) - gamma sin(sx)] [s cos(sy) - gamma sin(sy)] ds.
///
/// The upper limit S is chosen from the bound |integrand| <= 2 exp(-s^2 t/2),
/// so the neglected tail is certified below abs_tol / truncation_safety and
/// is included in error_estimate. [0, S] is pre-partitioned into panels of
/// roughly one oscillation wavelength 2 pi / max(x, y).
QuadResult damped_oscillatory_integral(double t, double x, double y, double gamma,
                                       const QuadConfig& cfg);

/// Upper limit S with int_S^inf 2 exp(-s^2 t/2) ds <= tail.
double damped_truncation_point(double t, double tail);

/// int_0^inf f(u) 2 gamma exp(-2 gamma u) du. The domain is first cut where
/// the weight tail drops below abs_tol / truncation_safety and then extended
/// in blocks until a block contributes less than that.
QuadResult integrate_halfline_weighted(const Integrand& f, double gamma, const QuadConfig& cfg,
                                       std::span<const double> breakpoints = {});

/// int_E g dm_gamma for g that depends on a 3D point only through its
/// radius: int_0^inf g1(r) 2 gamma e^{-2 gamma r} dr + int_0^inf g2(u)
/// 2 gamma e^{-2 gamma u} du.
QuadResult integrate_E_rotreduced(const Integrand& g_radial_E1, const Integrand& g_E2, double gamma,
                                  const QuadConfig& cfg, std::span<const double> breakpoints = {});

/// int_{E1} g dm_gamma for g symmetric about an axis, written in the radius
/// r and the cosine c of the polar angle:
///   int_0^inf 2 gamma e^{-2 gamma r} int_{-1}^{1} g(r, c) dc/2 dr.
/// The inner integral is solved to abs_tol / 4; its error is carried into
/// the returned estimate.
QuadResult integrate_E1_axisymmetric(const Integrand2& g, double gamma, const QuadConfig& cfg,
                                     std::span<const double> radial_breakpoints = {});

}  // namespace vdkernel
