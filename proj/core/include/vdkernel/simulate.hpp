#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "vdkernel/geometry.hpp"

namespace vdkernel {

enum class Scheme { Signed, Reflected, FullSkewProduct };
enum class RecordMode {
  EndpointOnly,
  FullPath,      ///< keep the radial value at every grid time
  FirstPassage,  ///< stop each path when it first reaches the origin
};

std::string_view to_string(Scheme s) noexcept;
std::string_view to_string(RecordMode r) noexcept;

/// Euler discretisation plan. The start is either a point of E or a signed
/// radial value (positive: 3D part on the z axis, negative: half-line).
struct SimPlan {
  Scheme scheme = Scheme::Signed;
  std::variant<EPoint, double> x0 = 0.0;
  double horizon = 1.0;
  double dt = 1e-3;
  std::uint64_t n_paths = 1000;
  std::uint64_t seed = 0;
  RecordMode record = RecordMode::EndpointOnly;
  /// Near the origin the angular clock increment dt / Y^2 is capped at
  /// clock_cap.
  double clock_cap = 100.0;
  /// ClockOverflow is raised when a path's accumulated clock exceeds this.
  double clock_guard = 1e12;
  /// Worker threads; 0 selects default_worker_count().
  unsigned threads = 0;

  /// Throws InvalidPlan or ResourceGuard.
  void validate() const;
  /// Number of Euler steps, ceil(horizon / dt); the last step is shortened
  /// to land on the horizon.
  std::uint64_t steps() const;
  /// Starting signed radial value.
  double start_value() const;
};

struct PathSample {
  /// Endpoint in E. Absent for the reflected scheme, whose state lives on
  /// [0, inf) rather than in E.
  std::optional<EPoint> endpoint;
  /// Signed radial value of the endpoint (Signed, FullSkewProduct) or the
  /// reflected value (Reflected).
  double value = 0.0;
  bool hit_origin = false;
  /// First time the discretised path reaches 0, interpolated linearly within
  /// the crossing step.
  std::optional<double> first_passage_time;
  /// Sum of reflection overshoots 2 max(-z, 0) (Reflected scheme only).
  double local_time_accum = 0.0;
  /// Values at grid times 0, dt, ..., horizon when record == FullPath.
  std::vector<double> trajectory;
};

/// hardware_concurrency, capped by the VDKERNEL_THREADS environment variable.
unsigned default_worker_count();

/// Y_{k+1} = Y_k + sqrt(dt) xi_k - gamma dt sign(Y_k).
std::vector<PathSample> simulate_signed(const SimPlan& plan, const KernelParams& params);

/// Yhat_{k+1} = |Yhat_k + sqrt(dt) xi_k - gamma dt|.
std::vector<PathSample> simulate_reflected(const SimPlan& plan, const KernelParams& params);

/// Skew product on E: the signed scheme for the radius and, in the 3D part,
/// a spherical Brownian motion run at the clock int Y^{-2} ds. The direction
/// is uniform on each entry into the 3D part.
std::vector<PathSample> simulate_full(const SimPlan& plan, const KernelParams& params);

/// Dispatches on plan.scheme.
std::vector<PathSample> simulate(const SimPlan& plan, const KernelParams& params);

/// Exact draws of the first hitting time of 0 from x > 0 (inverse Gaussian
/// with mean x / gamma and shape x^2).
std::vector<double> sample_first_passage(double x, const KernelParams& params, std::size_t n,
                                         std::uint64_t seed);

struct EmpiricalDensity {
  std::vector<double> bin_edges;
  std::vector<double> masses;  ///< count / n_samples per bin
  MeasureTag measure = MeasureTag::Lebesgue;
  std::size_t n_samples = 0;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  /// Gamma for the weighted measures; unused for Lebesgue.
  double gamma = 1.0;

  /// Bin mass divided by the bin's measure. Bins are read in the signed
  /// radial coordinate, so for MGamma a negative bin is an interval of the
  /// half-line and a positive one a shell of the 3D part.
  double density(std::size_t bin) const;
};

/// Bins samples into [e_0, e_1), ..., [e_{n-1}, e_n]. Throws EmptySample or
/// UnsortedEdges.
EmpiricalDensity empirical_density(std::span<const double> samples,
                                   std::span<const double> bin_edges, MeasureTag measure,
                                   const KernelParams& params);

/// The `value` field of every sample.
std::vector<double> sample_values(std::span<const PathSample> samples);

}  // namespace vdkernel
