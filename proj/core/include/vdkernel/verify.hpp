#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdkernel/geometry.hpp"
#include "vdkernel/kernelvd.hpp"
#include "vdkernel/quadrature.hpp"
#include "vdkernel/simulate.hpp"

namespace vdkernel {

struct CheckReport {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string details;
};

/// Builds a report with abs_error = |computed - reference| and
/// passed = abs_error <= tolerance.
CheckReport make_report(std::string name, double computed, double reference, double tolerance,
                        std::string details = {});

enum class OriginFormula {
  LimitConsistent,  ///< reflected_kernel(t, 0, |y|) / 2
  /// The variant with exponent gamma |y| - gamma t^2 / 2 and an extra factor
  /// s in the integrand. Kept only as a negative control.
  AsPrinted,
};

/// The analytic side of a check. The default is the library kernel; the
/// other settings produce deliberately wrong models so tests can confirm
/// that the checks are able to fail.
struct AnalyticModel {
  /// The kernel is evaluated with gamma * gamma_scale; measures keep the
  /// true gamma.
  double gamma_scale = 1.0;
  /// Weight of (reflected - killed) in the hitting term; 0.5 is correct.
  double hitting_weight = 0.5;
  OriginFormula origin = OriginFormula::LimitConsistent;

  bool is_nominal() const noexcept {
    return gamma_scale == 1.0 && hitting_weight == 0.5 && origin == OriginFormula::LimitConsistent;
  }
};

/// The printed origin variant, for negative controls.
double origin_kernel_as_printed(double t, double y_radius, const KernelParams& params,
                                const QuadConfig& cfg);

/// p(t, x, y) under `model`. Equals kernel() for the nominal model.
KernelVDValue model_kernel(double t, const EPoint& x, const EPoint& y, const KernelParams& params,
                           const AnalyticModel& model, const QuadConfig& cfg);

/// Tolerances and quadrature settings shared by the checks.
struct CheckConfig {
  QuadConfig kernel_cfg{};  ///< pointwise kernel evaluations
  QuadConfig outer_cfg{1e-9, 1e-9, 4000, 10.0};  ///< integrals over E or time
  AnalyticModel model{};
};

/// int_E p(t, x, .) dm_gamma against 1 (tolerance 1e-6).
CheckReport check_normalization(double t, const EPoint& x, const KernelParams& params,
                                const CheckConfig& cc = {}, double tolerance = 1e-6);

/// int_E p(t, x, z) p(s, z, y) m_gamma(dz) against p(t + s, x, y). Points of
/// the 3D part, if any, must lie on a common line through the origin so the
/// integrand is symmetric about that line; otherwise UnsupportedPattern.
CheckReport check_chapman_kolmogorov(double t, double s, const EPoint& x, const EPoint& y,
                                     const KernelParams& params, const CheckConfig& cc = {},
                                     double tolerance = 1e-4);

/// int_{E1} q(t, x, z) q(s, z, y) m_gamma(dz) against q(t + s, x, y), for
/// collinear x, y in the 3D part.
CheckReport check_killed_semigroup(double t, double s, const EPoint& x, const EPoint& y,
                                   const KernelParams& params, const CheckConfig& cc = {},
                                   double tolerance = 1e-6);

/// int_0^t f(s, x) p^Y(t - s, 0, -y) ds against p^Y(t, x, -y), both densities
/// with respect to m-tilde; f is the first-passage density. The two kernels
/// are the origin and cross cases of the model, so a wrong origin formula
/// breaks the identity while a consistent change of gamma does not.
CheckReport check_convolution_identity(double t, double x, double y, const KernelParams& params,
                                       const CheckConfig& cc = {}, double tolerance = 1e-4);

/// p(t, x_n, y) with x_n on the half-line at radius 2^-12, against the
/// origin kernel.
CheckReport check_origin_continuity(double t, const EPoint& y, const KernelParams& params,
                                    const CheckConfig& cc = {}, double tolerance = 1e-3);

/// survival_probability_3d against 1 - first_passage_cdf.
CheckReport check_survival_consistency(double t, const EPoint& x, const KernelParams& params,
                                       const CheckConfig& cc = {}, double tolerance = 1e-6);

/// p(t, x, y) against the equilibrium density 1/2.
CheckReport check_equilibrium(double t, const EPoint& x, const EPoint& y,
                              const KernelParams& params, const CheckConfig& cc = {},
                              double tolerance = 1e-3);

/// Outcome of binning Monte Carlo endpoints against the analytic kernel.
struct McComparison {
  std::vector<double> edges;     ///< in the sampled coordinate
  std::vector<double> observed;  ///< counts
  std::vector<double> expected;  ///< n * P(bin)
};

/// Default bin edges for endpoints of `plan` (signed radial coordinate, or
/// [0, inf) for the reflected scheme).
std::vector<double> default_mc_edges(const SimPlan& plan, const KernelParams& params);

/// Probability that the plan's sampled coordinate falls in [a, b] under
/// p(t, x, .) m_gamma.
double analytic_bin_probability(const SimPlan& plan, double t, const EPoint& x, double a,
                                double b, const KernelParams& params, const CheckConfig& cc);

/// Chi-square comparison (at least 20 expected counts per merged bin);
/// passes when the p-value exceeds 0.001. `computed` is the p-value and
/// `reference` the 0.001 threshold. Throws InsufficientSamples below 1e4
/// paths.
CheckReport check_mc_agreement(const SimPlan& plan, double t, const EPoint& x,
                               const KernelParams& params, const CheckConfig& cc = {});

/// Same, on samples already simulated from `plan`.
CheckReport check_mc_agreement(std::span<const PathSample> samples, const SimPlan& plan, double t,
                               const EPoint& x, const KernelParams& params,
                               const CheckConfig& cc = {});

/// Single-bin comparison of the empirical mass of {signed radial in
/// [-half_width, half_width]} with the analytic mass, for samples started at
/// the origin. Passes when the one-degree-of-freedom chi-square p-value
/// exceeds 0.001.
CheckReport check_origin_bin(std::span<const PathSample> samples, const SimPlan& plan,
                             double half_width, const KernelParams& params,
                             const CheckConfig& cc = {});

enum class Suite { Fast, Full };

/// A fixed battery of the checks above. Deterministic given `seed`.
std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed);

}  // namespace vdkernel
