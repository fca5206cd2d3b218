#pragma once

#include "vdkernel/geometry.hpp"
#include "vdkernel/quadrature.hpp"

namespace vdkernel {

/// A one-dimensional transition density together with the reference measure
/// it is taken against. Quadrature-backed values carry an error estimate;
/// closed forms report zero.
struct Kernel1DValue {
  double value = 0.0;
  MeasureTag measure = MeasureTag::MPlus;
  double error_estimate = 0.0;
};

/// Density of the unsigned radial process |Y| (Brownian motion with drift
/// -gamma reflected at 0) with respect to m^(+):
///   1 + exp(gamma (x + y) - gamma^2 t / 2) / (pi gamma) * I(t, x, y),
/// with I from damped_oscillatory_integral. The quadrature tolerance is
/// rescaled by the prefactor so that cfg applies to the returned density.
Kernel1DValue reflected_kernel(double t, double x, double y, const KernelParams& params,
                               const QuadConfig& cfg);

/// Density of Y on (0, inf) killed on first hitting 0, w.r.t. m^(+):
///   exp(-gamma^2 t/2 + gamma (x + y)) / (gamma sqrt(8 pi t))
///   * (exp(-(x - y)^2 / 2t) - exp(-(x + y)^2 / 2t)).
/// Requires x, y > 0.
Kernel1DValue killed_halfline_kernel(double t, double x, double y, const KernelParams& params);

/// Contribution of paths that visit 0 before t:
///   (reflected_kernel - killed_halfline_kernel) / 2.
/// This is also the signed kernel between opposite sides, p^Y(t, x, -y).
Kernel1DValue hitting_part(double t, double x, double y, const KernelParams& params,
                           const QuadConfig& cfg);

/// Density of the signed radial process Y w.r.t. m-tilde on the whole line.
/// Same sign: half the sum of the reflected and killed kernels; opposite
/// signs: half their difference; either argument zero: half the reflected
/// kernel (the continuous extension).
Kernel1DValue signed_kernel(double t, double x, double y, const KernelParams& params,
                            const QuadConfig& cfg);

/// Inverse-Gaussian density of the first hitting time of 0 for Y started
/// at x > 0.
double first_passage_density(double s, double x, const KernelParams& params);

/// P_x(first hitting time of 0 <= s), closed form.
double first_passage_cdf(double s, double x, const KernelParams& params);

/// Same density re-expressed against Lebesgue measure at the point y of
/// the line (multiplication by 2 gamma exp(-2 gamma |y|)).
double to_lebesgue(const Kernel1DValue& v, double y, const KernelParams& params);

}  // namespace vdkernel
