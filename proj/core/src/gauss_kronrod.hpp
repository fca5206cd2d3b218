// Internal globally adaptive Gauss-Kronrod engine shared by the public
// quadrature entry points. Header-only so hot integrands inline.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "vdkernel/errors.hpp"
#include "vdkernel/quadrature.hpp"

namespace vdkernel::detail {

// QUADPACK qk21 nodes (descending, centre last) and weights.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980054813, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss 10-point weights for the nodes kXgk[1], kXgk[3], ..., kXgk[9].
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool at_roundoff = false;
};

template <class F>
double checked_call(F& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFiniteF, "integrand is not finite at " + std::to_string(x));
  }
  return v;
}

template <class F>
Panel gk21(F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};
  const double fc = checked_call(f, centre);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = checked_call(f, centre - dx);
    fv2[j] = checked_call(f, centre + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  const double abs_half = std::abs(half);
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * eps * resabs;
  if (err <= floor) {
    err = floor;
    p.at_roundoff = true;
  }
  p.error = err;
  return p;
}

/// Globally adaptive bisection starting from the panels delimited by `edges`
/// (sorted, at least two entries). Panels whose error sits at the round-off
/// floor are not refined further; if only such panels remain the result is
/// returned with its (honest) error estimate.
template <class F>
QuadResult adaptive_integrate(F& f, const std::vector<double>& edges, double abs_tol,
                              double rel_tol, std::size_t max_panels) {
  std::vector<Panel> panels;
  panels.reserve(std::max<std::size_t>(edges.size(), 16));
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i]) panels.push_back(gk21(f, edges[i], edges[i + 1]));
  }
  if (panels.empty()) return QuadResult{0.0, 0.0, edges.back(), 0};

  const auto worse = [&panels](std::size_t i, std::size_t j) {
    return panels[i].error < panels[j].error;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);

  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    value += panels[i].value;
    error += panels[i].error;
    if (!panels[i].at_roundoff) heap.push(i);
  }

  std::size_t since_refresh = 0;
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (heap.empty()) break;
    if (panels.size() >= max_panels) {
      throw Error(ErrorCode::NoConvergence,
                  "adaptive quadrature exhausted " + std::to_string(max_panels) +
                      " panels (error estimate " + std::to_string(error) + ")");
    }
    const std::size_t worst = heap.top();
    heap.pop();
    const Panel old = panels[worst];
    const double mid = 0.5 * (old.a + old.b);
    if (!(mid > old.a && mid < old.b)) {
      // Interval can no longer be split in floating point.
      panels[worst].at_roundoff = true;
      continue;
    }
    const Panel left = gk21(f, old.a, mid);
    const Panel right = gk21(f, mid, old.b);
    value += left.value + right.value - old.value;
    error += left.error + right.error - old.error;
    panels[worst] = left;
    panels.push_back(right);
    if (!left.at_roundoff) heap.push(worst);
    if (!right.at_roundoff) heap.push(panels.size() - 1);

    if (++since_refresh == 64) {
      since_refresh = 0;
      value = 0.0;
      error = 0.0;
      for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
      }
    }
  }

  // Exact final sums in a fixed (left-to-right) order so results do not
  // depend on the refinement history beyond the panel set itself.
  std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
  QuadResult out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.truncation_point = edges.back();
  out.panels_used = panels.size();
  return out;
}

/// Uniform partition of [a, b] into `n` panels merged with the interior
/// breakpoints.
inline std::vector<double> make_edges(double a, double b, std::size_t n,
                                      std::span<const double> breakpoints) {
  n = std::max<std::size_t>(n, 1);
  std::vector<double> edges;
  edges.reserve(n + 1 + breakpoints.size());
  for (std::size_t i = 0; i <= n; ++i) {
    edges.push_back(i == n ? b : a + (b - a) * (static_cast<double>(i) / static_cast<double>(n)));
  }
  for (double p : breakpoints) {
    if (p > a && p < b) edges.push_back(p);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace vdkernel::detail
