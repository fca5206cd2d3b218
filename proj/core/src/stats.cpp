#include "vdkernel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>

#include "vdkernel/errors.hpp"

namespace vdkernel {

ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> expected, double min_expected,
                                std::size_t fitted_parameters) {
  require(observed.size() == expected.size(), ErrorCode::InvalidInput,
          "observed and expected differ in length");
  ChiSquareResult r;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    require(expected[i] >= 0.0 && observed[i] >= 0.0, ErrorCode::InvalidInput,
            "counts must be nonnegative");
    o += observed[i];
    e += expected[i];
    if (e >= min_expected) {
      r.observed.push_back(o);
      r.expected.push_back(e);
      o = 0.0;
      e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (r.expected.empty()) {
      r.observed.push_back(o);
      r.expected.push_back(e);
    } else {
      r.observed.back() += o;
      r.expected.back() += e;
    }
  }
  r.bins_used = r.expected.size();
  require(r.bins_used >= 2 + fitted_parameters, ErrorCode::InvalidInput,
          "too few bins left after merging");
  for (std::size_t i = 0; i < r.bins_used; ++i) {
    const double d = r.observed[i] - r.expected[i];
    r.statistic += d * d / r.expected[i];
  }
  r.dof = r.bins_used - 1 - fitted_parameters;
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.3) {
    // Dual series, accurate where the alternating one converges slowly.
    const double c = std::sqrt(2.0 * std::numbers::pi) / lambda;
    double s = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double a = (2 * k - 1) * std::numbers::pi / lambda;
      s += std::exp(-a * a / 8.0);
    }
    return std::clamp(1.0 - c * s, 0.0, 1.0);
  }
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    s += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * s, 0.0, 1.0);
}

namespace {

double stephens_lambda(double d, double n_eff) {
  const double rn = std::sqrt(n_eff);
  return (rn + 0.12 + 0.11 / rn) * d;
}

}  // namespace

KsResult ks_two_sample(std::span<const double> a_in, std::span<const double> b_in) {
  require(!a_in.empty() && !b_in.empty(), ErrorCode::EmptySample, "KS needs two nonempty samples");
  std::vector<double> a(a_in.begin(), a_in.end());
  std::vector<double> b(b_in.begin(), b_in.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return KsResult{d, kolmogorov_survival(stephens_lambda(d, na * nb / (na + nb)))};
}

namespace detail {

KsResult ks_one_sample_sorted(std::span<const double> sorted, std::span<const double> cdf_values) {
  require(!sorted.empty(), ErrorCode::EmptySample, "KS needs a nonempty sample");
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf_values[i];
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return KsResult{d, kolmogorov_survival(stephens_lambda(d, n))};
}

}  // namespace detail

}  // namespace vdkernel
