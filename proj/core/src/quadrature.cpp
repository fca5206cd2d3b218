#include "vdkernel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gauss_kronrod.hpp"
#include "vdkernel/errors.hpp"

namespace vdkernel {

void QuadConfig::validate() const {
  require(abs_tol > 0.0, ErrorCode::InvalidInput, "abs_tol must be > 0");
  require(rel_tol > 0.0, ErrorCode::InvalidInput, "rel_tol must be > 0");
  require(max_panels >= 8, ErrorCode::InvalidInput, "max_panels must be >= 8");
  require(truncation_safety >= 1.0, ErrorCode::InvalidInput, "truncation_safety must be >= 1");
}

QuadConfig QuadConfig::tightened(double factor) const {
  QuadConfig c = *this;
  c.abs_tol *= factor;
  c.rel_tol *= factor;
  return c;
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadConfig& cfg,
                              std::span<const double> breakpoints, std::size_t initial_panels) {
  cfg.validate();
  require(std::isfinite(a) && std::isfinite(b) && a <= b, ErrorCode::InvalidInput,
          "integration bounds must be finite and ordered");
  if (a == b) return QuadResult{0.0, 0.0, b, 0};
  auto fn = [&f](double s) { return f(s); };
  return detail::adaptive_integrate(fn, detail::make_edges(a, b, initial_panels, breakpoints),
                                    cfg.abs_tol, cfg.rel_tol, cfg.max_panels);
}

double damped_truncation_point(double t, double tail) {
  require(t > 0.0 && tail > 0.0, ErrorCode::InvalidInput, "t and tail must be positive");
  // Tail bound B(S) = 2 exp(-S^2 t / 2) / (S t), decreasing in S.
  const auto bound = [t](double s) { return 2.0 * std::exp(-0.5 * s * s * t) / (s * t); };
  double s = std::sqrt(2.0 * std::max(1.0, std::log(2.0 / tail)) / t);
  for (int i = 0; i < 50; ++i) {
    const double arg = 2.0 / (s * t * tail);
    if (arg <= 1.0) break;
    const double next = std::sqrt(2.0 * std::log(arg) / t);
    if (std::abs(next - s) <= 1e-12 * s) {
      s = next;
      break;
    }
    s = next;
  }
  while (bound(s) > tail) s *= 1.01;
  return s;
}

QuadResult damped_oscillatory_integral(double t, double x, double y, double gamma,
                                       const QuadConfig& cfg) {
  cfg.validate();
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput, "t must be > 0");
  require(std::isfinite(x) && std::isfinite(y) && x >= 0.0 && y >= 0.0, ErrorCode::InvalidInput,
          "x and y must be finite and >= 0");
  require(std::isfinite(gamma) && gamma > 0.0, ErrorCode::InvalidInput, "gamma must be > 0");

  const double tail = cfg.abs_tol / cfg.truncation_safety;
  const double upper = damped_truncation_point(t, tail);
  const double span = std::max(x, y);
  const double wavelengths = upper * span / (2.0 * std::numbers::pi);
  const std::size_t initial = static_cast<std::size_t>(
      std::clamp(std::ceil(wavelengths), 4.0, static_cast<double>(cfg.max_panels / 2)));

  const double g2 = gamma * gamma;
  auto integrand = [t, x, y, gamma, g2](double s) {
    const double damp = std::exp(-0.5 * s * s * t) / (s * s + g2);
    const double fx = s * std::cos(s * x) - gamma * std::sin(s * x);
    const double fy = s * std::cos(s * y) - gamma * std::sin(s * y);
    return damp * (fx * fy);
  };

  QuadResult r = detail::adaptive_integrate(
      integrand, detail::make_edges(0.0, upper, initial, {}), cfg.abs_tol - tail, cfg.rel_tol,
      cfg.max_panels);
  r.error_estimate += tail;
  r.truncation_point = upper;
  return r;
}

QuadResult integrate_halfline_weighted(const Integrand& f, double gamma, const QuadConfig& cfg,
                                       std::span<const double> breakpoints) {
  cfg.validate();
  require(std::isfinite(gamma) && gamma > 0.0, ErrorCode::InvalidInput, "gamma must be > 0");
  const double g2 = 2.0 * gamma;
  auto weighted = [&f, g2](double u) {
    const double w = g2 * std::exp(-g2 * u);
    const double v = f(u);
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteF, "integrand is not finite at u = " + std::to_string(u));
    }
    return v * w;
  };

  const double tail = cfg.abs_tol / cfg.truncation_safety;
  double upper = std::log(1.0 / tail) / g2;
  for (double p : breakpoints) upper = std::max(upper, 1.25 * p);

  QuadResult out = detail::adaptive_integrate(
      weighted, detail::make_edges(0.0, upper, 8, breakpoints), cfg.abs_tol - tail, cfg.rel_tol,
      cfg.max_panels);

  // Extend until a block is negligible; catches integrands that outgrow the
  // weight for a while.
  const double block = std::max(upper / 4.0, 1.0 / g2);
  constexpr int kMaxBlocks = 64;
  double last = 0.0;
  int blocks = 0;
  for (; blocks < kMaxBlocks; ++blocks) {
    const QuadResult r = detail::adaptive_integrate(
        weighted, detail::make_edges(upper, upper + block, 2, {}), tail, cfg.rel_tol,
        cfg.max_panels);
    upper += block;
    out.value += r.value;
    out.error_estimate += r.error_estimate;
    out.panels_used += r.panels_used;
    last = std::abs(r.value);
    if (last + r.error_estimate < tail) break;
  }
  if (blocks == kMaxBlocks) {
    throw Error(ErrorCode::NoConvergence, "weighted half-line integral tail does not decay");
  }
  out.error_estimate += last;
  out.truncation_point = upper;
  return out;
}

QuadResult integrate_E_rotreduced(const Integrand& g_radial_E1, const Integrand& g_E2, double gamma,
                                  const QuadConfig& cfg, std::span<const double> breakpoints) {
  const QuadConfig half = cfg.tightened(0.5);
  const QuadResult a = integrate_halfline_weighted(g_radial_E1, gamma, half, breakpoints);
  const QuadResult b = integrate_halfline_weighted(g_E2, gamma, half, breakpoints);
  return QuadResult{a.value + b.value, a.error_estimate + b.error_estimate,
                    std::max(a.truncation_point, b.truncation_point),
                    a.panels_used + b.panels_used};
}

QuadResult integrate_E1_axisymmetric(const Integrand2& g, double gamma, const QuadConfig& cfg,
                                     std::span<const double> radial_breakpoints) {
  cfg.validate();
  const QuadConfig inner_cfg = cfg.tightened(0.25);
  double worst_inner = 0.0;
  std::size_t inner_panels = 0;
  const Integrand radial = [&](double r) {
    auto angular = [&g, r](double c) { return 0.5 * g(r, c); };
    const QuadResult in = detail::adaptive_integrate(
        angular, detail::make_edges(-1.0, 1.0, 4, {}), inner_cfg.abs_tol, inner_cfg.rel_tol,
        inner_cfg.max_panels);
    worst_inner = std::max(worst_inner, in.error_estimate);
    inner_panels += in.panels_used;
    return in.value;
  };
  QuadResult out = integrate_halfline_weighted(radial, gamma, cfg.tightened(0.5),
                                               radial_breakpoints);
  out.error_estimate += worst_inner;
  out.panels_used += inner_panels;
  return out;
}

}  // namespace vdkernel
