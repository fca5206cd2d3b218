#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vdkernel {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  /// Bin count after merging.
  std::size_t bins_used = 0;
  /// Observed / expected counts of the merged bins.
  std::vector<double> observed;
  std::vector<double> expected;
};

/// Pearson goodness of fit of observed counts against expected counts.
/// Adjacent bins are merged left to right until each holds at least
/// `min_expected` expected counts (a short remainder joins the last bin).
/// dof = merged bins - 1 - `fitted_parameters`. Throws InvalidInput when
/// fewer than two bins remain.
ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> expected, double min_expected = 20.0,
                                std::size_t fitted_parameters = 0);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov law
/// and Stephens' small-sample correction.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// One-sample test against a continuous CDF evaluated at the sorted sample.
template <class Cdf>
KsResult ks_one_sample(std::vector<double> sample, Cdf&& cdf);

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

namespace detail {
KsResult ks_one_sample_sorted(std::span<const double> sorted, std::span<const double> cdf_values);
}

}  // namespace vdkernel

#include <algorithm>

template <class Cdf>
vdkernel::KsResult vdkernel::ks_one_sample(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  std::vector<double> f(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) f[i] = cdf(sample[i]);
  return detail::ks_one_sample_sorted(sample, f);
}
