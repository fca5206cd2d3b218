#include "vdkernel/kernels1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vdkernel/errors.hpp"

namespace vdkernel {

namespace {

void require_time(double t) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be finite and > 0");
}

void require_nonneg(double v, const char* name) {
  require(std::isfinite(v) && v >= 0.0, ErrorCode::InvalidInput,
          std::string(name) + " must be finite and >= 0");
}

void require_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, ErrorCode::InvalidInput,
          std::string(name) + " must be finite and > 0");
}

}  // namespace

Kernel1DValue reflected_kernel(double t, double x, double y, const KernelParams& params,
                               const QuadConfig& cfg) {
  require_time(t);
  require_nonneg(x, "x");
  require_nonneg(y, "y");
  // One code path for (x, y) and (y, x).
  if (y < x) std::swap(x, y);

  const double g = params.gamma();
  const double log_prefactor = g * (x + y) - 0.5 * g * g * t - std::log(std::numbers::pi * g);
  const double prefactor = std::exp(log_prefactor);

  QuadConfig inner = cfg;
  if (prefactor > 1.0) inner.abs_tol = cfg.abs_tol / prefactor;
  const QuadResult integral = damped_oscillatory_integral(t, x, y, g, inner);

  return Kernel1DValue{1.0 + prefactor * integral.value, MeasureTag::MPlus,
                       prefactor * integral.error_estimate};
}

Kernel1DValue killed_halfline_kernel(double t, double x, double y, const KernelParams& params) {
  require_time(t);
  require_positive(x, "x");
  require_positive(y, "y");
  const double g = params.gamma();
  const double d = x - y;
  // e^{-(x-y)^2/2t} - e^{-(x+y)^2/2t} = -e^{-(x-y)^2/2t} expm1(-2xy/t), with
  // every exponential folded into one exponent.
  const double exponent = -0.5 * g * g * t + g * (x + y) - d * d / (2.0 * t);
  const double gap = -std::expm1(-2.0 * x * y / t);
  const double value = std::exp(exponent) * gap / (g * std::sqrt(8.0 * std::numbers::pi * t));
  return Kernel1DValue{value, MeasureTag::MPlus, 0.0};
}

Kernel1DValue hitting_part(double t, double x, double y, const KernelParams& params,
                           const QuadConfig& cfg) {
  const Kernel1DValue refl = reflected_kernel(t, x, y, params, cfg);
  const Kernel1DValue killed = killed_halfline_kernel(t, x, y, params);
  const double err = 0.5 * refl.error_estimate;
  const double value = 0.5 * (refl.value - killed.value);
  // Both constituents are densities; a negative difference beyond the
  // quadrature error would mean the reflected kernel is wrong.
  const double slack = err + 64.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(std::abs(refl.value), 1.0);
  require(value >= -slack, ErrorCode::NoConvergence,
          "hitting part is negative beyond its error estimate");
  return Kernel1DValue{value, MeasureTag::MPlus, err};
}

Kernel1DValue signed_kernel(double t, double x, double y, const KernelParams& params,
                            const QuadConfig& cfg) {
  require_time(t);
  require(std::isfinite(x) && std::isfinite(y), ErrorCode::InvalidInput, "x, y must be finite");
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  const Kernel1DValue refl = reflected_kernel(t, ax, ay, params, cfg);
  Kernel1DValue out{0.5 * refl.value, MeasureTag::MTilde, 0.5 * refl.error_estimate};
  if (x == 0.0 || y == 0.0) return out;
  const double killed = killed_halfline_kernel(t, ax, ay, params).value;
  const bool same_side = (x > 0.0) == (y > 0.0);
  out.value = same_side ? 0.5 * (refl.value + killed) : 0.5 * (refl.value - killed);
  return out;
}

double first_passage_density(double s, double x, const KernelParams& params) {
  require_positive(s, "s");
  require_positive(x, "x");
  const double g = params.gamma();
  const double d = x - g * s;
  return x / std::sqrt(2.0 * std::numbers::pi * s * s * s) * std::exp(-d * d / (2.0 * s));
}

double first_passage_cdf(double s, double x, const KernelParams& params) {
  require_nonneg(s, "s");
  require_positive(x, "x");
  if (s == 0.0) return 0.0;
  const double g = params.gamma();
  const double rs = std::sqrt(s);
  // Phi((g s - x)/sqrt s) + e^{2 g x} Phi(-(g s + x)/sqrt s)
  const double first = 0.5 * std::erfc((x - g * s) / (rs * std::numbers::sqrt2));
  const double z = (g * s + x) / (rs * std::numbers::sqrt2);
  const double tail = std::erfc(z);
  double second = 0.0;
  if (tail > 0.0) second = 0.5 * std::exp(2.0 * g * x + std::log(tail));
  return std::min(1.0, first + second);
}

double to_lebesgue(const Kernel1DValue& v, double y, const KernelParams& params) {
  if (v.measure == MeasureTag::Lebesgue) return v.value;
  return v.value * params.line_weight(y);
}

}  // namespace vdkernel
