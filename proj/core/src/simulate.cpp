#include "vdkernel/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "vdkernel/errors.hpp"
#include "vdkernel/rng.hpp"

namespace vdkernel {

namespace {

constexpr std::uint64_t kMaxSteps = 1'000'000'000ull;
constexpr double kMaxResultBytes = 2.0 * 1024 * 1024 * 1024;
// Spherical Brownian motion run this long is uniform to within e^{-40}.
constexpr double kMixedClock = 40.0;
constexpr double kSphereSubstep = 0.01;

// Stream ids above this are reserved for auxiliary draws of a path (the
// angular part), so they never collide with a radial stream.
constexpr std::uint64_t kAngularStreamOffset = 1ull << 62;

Vec3 uniform_direction(PathRng& rng) {
  for (;;) {
    const Vec3 g{rng.normal(), rng.normal(), rng.normal()};
    const double n = std::hypot(g[0], g[1], g[2]);
    if (n > 1e-12) return Vec3{g[0] / n, g[1] / n, g[2] / n};
  }
}

// Brownian motion on the unit sphere (generator half the Laplacian) run for
// clock time `a` from `u`: tangent-plane Gaussian steps, renormalised.
Vec3 sphere_walk(Vec3 u, double a, PathRng& rng) {
  if (a >= kMixedClock) return uniform_direction(rng);
  if (a <= 0.0) return u;
  const auto n = static_cast<std::uint64_t>(std::ceil(a / kSphereSubstep));
  const double sd = std::sqrt(a / static_cast<double>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    Vec3 g{rng.normal(), rng.normal(), rng.normal()};
    const double dot = g[0] * u[0] + g[1] * u[1] + g[2] * u[2];
    Vec3 w{};
    for (int k = 0; k < 3; ++k) w[k] = u[k] + sd * (g[k] - dot * u[k]);
    const double norm = std::hypot(w[0], w[1], w[2]);
    for (int k = 0; k < 3; ++k) u[k] = w[k] / norm;
  }
  return u;
}

EPoint point_from_value(double y, const Vec3& dir) {
  if (std::abs(y) < kMinRadius) return EPoint::origin();
  return EPoint::from_signed_radial(y, dir);
}

struct StepGrid {
  std::uint64_t steps;
  double dt;
  double sqrt_dt;
  double last_dt;
  double sqrt_last;
};

StepGrid make_grid(const SimPlan& plan) {
  StepGrid g{};
  g.steps = plan.steps();
  g.dt = plan.dt;
  g.sqrt_dt = std::sqrt(plan.dt);
  g.last_dt = plan.horizon - plan.dt * static_cast<double>(g.steps - 1);
  if (!(g.last_dt > 0.0)) g.last_dt = plan.dt;
  g.sqrt_last = std::sqrt(g.last_dt);
  return g;
}

// -1, 0 or 1, without branches: the sign of y is unpredictable near 0.
inline double sign_of(double y) noexcept {
  return static_cast<double>(static_cast<int>(y > 0.0) - static_cast<int>(y < 0.0));
}

// One Euler step of the radial chain. `Reflect` selects the absolute value
// scheme.
template <bool Reflect>
inline double euler_step(double y, double h, double sh, double gamma, double xi) noexcept {
  if constexpr (Reflect) {
    return y + sh * xi - gamma * h;
  } else {
    return y + sh * xi - gamma * h * sign_of(y);
  }
}

template <bool Reflect>
inline bool crosses(double y, double z) noexcept {
  if constexpr (Reflect) {
    return z <= 0.0;
  } else {
    return z == 0.0 || (y > 0.0) != (z > 0.0);
  }
}

// Radial Euler chain shared by all schemes. `Clock` accumulates the capped
// angular clock while the path has not yet reached the origin. The loop is
// split at the first passage so the common case after it carries no
// bookkeeping.
template <bool Reflect, bool Clock>
PathSample run_radial(double y, const StepGrid& grid, const SimPlan& plan, double gamma,
                      PathRng& rng, double* clock) {
  PathSample out;
  const bool keep_path = plan.record == RecordMode::FullPath;
  const bool stop_at_hit = plan.record == RecordMode::FirstPassage;
  if (keep_path) {
    out.trajectory.reserve(grid.steps + 1);
    out.trajectory.push_back(y);
  }
  double acc = 0.0;
  double local_time = 0.0;
  std::uint64_t k = 0;
  const std::uint64_t full_steps = grid.steps - 1;  // the last step may be shorter
  const auto step = [&](double h, double sh) {
    double z = euler_step<Reflect>(y, h, sh, gamma, rng.normal());
    if constexpr (Clock) {
      if (!out.hit_origin && y > 0.0) acc += std::min(h / (y * y), plan.clock_cap);
    }
    if (!out.hit_origin && crosses<Reflect>(y, z)) {
      out.hit_origin = true;
      const double frac = (y - z) != 0.0 ? y / (y - z) : 1.0;
      out.first_passage_time = static_cast<double>(k) * grid.dt + h * std::clamp(frac, 0.0, 1.0);
    }
    if constexpr (Reflect) {
      if (z < 0.0) {
        local_time -= 2.0 * z;
        z = -z;
      }
    }
    y = z;
    if (keep_path) out.trajectory.push_back(y);
  };

  if (y == 0.0) {
    out.hit_origin = true;
    out.first_passage_time = 0.0;
  }
  if (!keep_path && !out.hit_origin) {
    // Until the first passage.
    for (; k < full_steps; ++k) {
      step(grid.dt, grid.sqrt_dt);
      if (out.hit_origin) {
        ++k;
        break;
      }
    }
  }
  if (!(stop_at_hit && out.hit_origin)) {
    if (!keep_path && out.hit_origin && !Reflect) {
      // Signed chain after the first passage: nothing left to record.
      const double gh = gamma * grid.dt;
      const double sd = grid.sqrt_dt;
      for (; k < full_steps; ++k) {
        y += sd * rng.normal() - gh * sign_of(y);
      }
    } else if (!keep_path && out.hit_origin) {
      const double gh = gamma * grid.dt;
      const double sd = grid.sqrt_dt;
      for (; k < full_steps; ++k) {
        const double z = y + sd * rng.normal() - gh;
        local_time += z < 0.0 ? -2.0 * z : 0.0;
        y = std::abs(z);
      }
    } else {
      for (; k < full_steps; ++k) {
        if (stop_at_hit && out.hit_origin) break;
        step(grid.dt, grid.sqrt_dt);
      }
    }
    if (k == full_steps && !(stop_at_hit && out.hit_origin)) {
      step(grid.last_dt, grid.sqrt_last);
    }
  }
  if (stop_at_hit && out.hit_origin) y = 0.0;
  out.value = y;
  out.local_time_accum = local_time;
  if (clock != nullptr) *clock = acc;
  return out;
}

template <class Fn>
std::vector<PathSample> run_paths(const SimPlan& plan, Fn&& one_path) {
  std::vector<PathSample> results(plan.n_paths);
  const unsigned workers = std::max(
      1u, std::min<unsigned>(plan.threads == 0 ? default_worker_count() : plan.threads,
                             static_cast<unsigned>(std::min<std::uint64_t>(plan.n_paths, 1u << 16))));
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= plan.n_paths) return;
        const std::uint64_t end = std::min(plan.n_paths, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) results[i] = one_path(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(plan.n_paths);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void require_scheme(const SimPlan& plan, Scheme s) {
  require(plan.scheme == s, ErrorCode::InvalidPlan,
          std::string("plan scheme is ") + std::string(to_string(plan.scheme)) + ", expected " +
              std::string(to_string(s)));
}

}  // namespace

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Signed:
      return "Signed";
    case Scheme::Reflected:
      return "Reflected";
    case Scheme::FullSkewProduct:
      return "FullSkewProduct";
  }
  return "?";
}

std::string_view to_string(RecordMode r) noexcept {
  switch (r) {
    case RecordMode::EndpointOnly:
      return "EndpointOnly";
    case RecordMode::FullPath:
      return "FullPath";
    case RecordMode::FirstPassage:
      return "FirstPassage";
  }
  return "?";
}

void SimPlan::validate() const {
  require(std::isfinite(horizon) && horizon > 0.0, ErrorCode::InvalidPlan,
          "horizon must be finite and > 0");
  require(std::isfinite(dt) && dt > 0.0, ErrorCode::InvalidPlan, "dt must be finite and > 0");
  require(dt <= horizon, ErrorCode::InvalidPlan, "dt must not exceed the horizon");
  require(n_paths >= 1, ErrorCode::InvalidPlan, "n_paths must be >= 1");
  require(clock_cap > 0.0, ErrorCode::InvalidPlan, "clock_cap must be > 0");
  require(clock_guard > 0.0, ErrorCode::InvalidPlan, "clock_guard must be > 0");
  if (const double* v = std::get_if<double>(&x0)) {
    require(std::isfinite(*v), ErrorCode::InvalidPlan, "x0 must be finite");
    require(scheme != Scheme::Reflected || *v >= 0.0, ErrorCode::InvalidPlan,
            "the reflected scheme starts at x0 >= 0");
  }
  const double ratio = std::ceil(horizon / dt);
  require(ratio <= static_cast<double>(kMaxSteps), ErrorCode::ResourceGuard,
          "horizon / dt exceeds 1e9 steps");
  double bytes = static_cast<double>(n_paths) * static_cast<double>(sizeof(PathSample));
  if (record == RecordMode::FullPath) {
    bytes += static_cast<double>(n_paths) * (ratio + 1.0) * static_cast<double>(sizeof(double));
  }
  require(bytes <= kMaxResultBytes, ErrorCode::ResourceGuard,
          "requested output exceeds the memory guard");
}

std::uint64_t SimPlan::steps() const {
  const double ratio = horizon / dt;
  auto n = static_cast<std::uint64_t>(std::ceil(ratio));
  // Treat a ratio within rounding of an integer as that integer.
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * nearest) n = static_cast<std::uint64_t>(nearest);
  return std::max<std::uint64_t>(n, 1);
}

double SimPlan::start_value() const {
  if (const double* v = std::get_if<double>(&x0)) return *v;
  return signed_radial(std::get<EPoint>(x0));
}

unsigned default_worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VDKERNEL_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<PathSample> simulate_signed(const SimPlan& plan, const KernelParams& params) {
  require_scheme(plan, Scheme::Signed);
  plan.validate();
  const StepGrid grid = make_grid(plan);
  const double y0 = plan.start_value();
  const double g = params.gamma();
  const Vec3 axis{0.0, 0.0, 1.0};
  return run_paths(plan, [&](std::uint64_t i) {
    PathRng rng(plan.seed, i);
    PathSample s = run_radial<false, false>(y0, grid, plan, g, rng, nullptr);
    s.endpoint = point_from_value(s.value, axis);
    return s;
  });
}

std::vector<PathSample> simulate_reflected(const SimPlan& plan, const KernelParams& params) {
  require_scheme(plan, Scheme::Reflected);
  plan.validate();
  const StepGrid grid = make_grid(plan);
  const double y0 = std::abs(plan.start_value());
  const double g = params.gamma();
  return run_paths(plan, [&](std::uint64_t i) {
    PathRng rng(plan.seed, i);
    return run_radial<true, false>(y0, grid, plan, g, rng, nullptr);
  });
}

std::vector<PathSample> simulate_full(const SimPlan& plan, const KernelParams& params) {
  require_scheme(plan, Scheme::FullSkewProduct);
  plan.validate();
  const StepGrid grid = make_grid(plan);
  const double g = params.gamma();
  double y0 = 0.0;
  std::optional<Vec3> dir0;
  if (const EPoint* p = std::get_if<EPoint>(&plan.x0)) {
    y0 = signed_radial(*p);
    if (p->component() == Component::Comp3D) {
      const Vec3& c = p->coords3();
      dir0 = Vec3{c[0] / p->radius(), c[1] / p->radius(), c[2] / p->radius()};
    }
  } else {
    y0 = std::get<double>(plan.x0);
    if (y0 > 0.0) dir0 = Vec3{0.0, 0.0, 1.0};
  }
  return run_paths(plan, [&](std::uint64_t i) {
    PathRng rng(plan.seed, i);
    double clock = 0.0;
    PathSample s = run_radial<false, true>(y0, grid, plan, g, rng, &clock);
    require(clock <= plan.clock_guard, ErrorCode::ClockOverflow,
            "angular clock exceeded its guard on path " + std::to_string(i));
    Vec3 dir{0.0, 0.0, 1.0};
    if (s.value > 0.0) {
      // Angular draws come from a separate stream so the radial chain is
      // identical to the signed scheme under the same seed.
      PathRng angular(plan.seed, kAngularStreamOffset + i);
      if (s.hit_origin || !dir0) {
        dir = uniform_direction(angular);
      } else {
        dir = sphere_walk(*dir0, clock, angular);
      }
    }
    s.endpoint = point_from_value(s.value, dir);
    return s;
  });
}

std::vector<PathSample> simulate(const SimPlan& plan, const KernelParams& params) {
  switch (plan.scheme) {
    case Scheme::Signed:
      return simulate_signed(plan, params);
    case Scheme::Reflected:
      return simulate_reflected(plan, params);
    case Scheme::FullSkewProduct:
      return simulate_full(plan, params);
  }
  throw Error(ErrorCode::InvalidPlan, "unknown scheme");
}

std::vector<double> sample_first_passage(double x, const KernelParams& params, std::size_t n,
                                         std::uint64_t seed) {
  require(std::isfinite(x) && x > 0.0, ErrorCode::InvalidInput, "x must be finite and > 0");
  require(n >= 1, ErrorCode::InvalidInput, "n must be >= 1");
  // Michael, Schucany and Haas transformation for the inverse Gaussian.
  const double mu = x / params.gamma();
  const double lambda = x * x;
  PathRng rng(seed, 0);
  std::vector<double> out(n);
  for (double& s : out) {
    const double nu = rng.normal();
    const double w = nu * nu;
    const double mw = mu * w;
    const double root = std::sqrt(4.0 * mu * lambda * w + mw * mw);
    double cand = mu + mu * mw / (2.0 * lambda) - mu / (2.0 * lambda) * root;
    // Cancellation can push the small root to 0 or below; use the equivalent
    // product form there.
    if (!(cand > 0.0)) cand = mu * (2.0 * lambda) / (2.0 * lambda + mw + root);
    s = rng.uniform_open() <= mu / (mu + cand) ? cand : mu * mu / cand;
  }
  return out;
}

double EmpiricalDensity::density(std::size_t bin) const {
  require(bin + 1 < bin_edges.size(), ErrorCode::InvalidInput, "bin index out of range");
  const KernelParams params(gamma);
  const MeasureTag tag = measure == MeasureTag::MGamma ? MeasureTag::MTilde : measure;
  return masses[bin] / interval_measure(bin_edges[bin], bin_edges[bin + 1], tag, params);
}

EmpiricalDensity empirical_density(std::span<const double> samples,
                                   std::span<const double> bin_edges, MeasureTag measure,
                                   const KernelParams& params) {
  require(!samples.empty(), ErrorCode::EmptySample, "no samples to bin");
  require(bin_edges.size() >= 2, ErrorCode::UnsortedEdges, "need at least two bin edges");
  for (std::size_t i = 1; i < bin_edges.size(); ++i) {
    require(bin_edges[i - 1] < bin_edges[i], ErrorCode::UnsortedEdges,
            "bin edges must be strictly increasing");
  }
  EmpiricalDensity d;
  d.bin_edges.assign(bin_edges.begin(), bin_edges.end());
  d.measure = measure;
  d.n_samples = samples.size();
  d.gamma = params.gamma();
  const std::size_t nb = bin_edges.size() - 1;
  std::vector<std::size_t> counts(nb, 0);
  for (double v : samples) {
    if (v < bin_edges.front()) {
      ++d.underflow;
    } else if (v > bin_edges.back()) {
      ++d.overflow;
    } else {
      auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), v);
      std::size_t idx = static_cast<std::size_t>(it - bin_edges.begin());
      idx = idx == 0 ? 0 : std::min(idx - 1, nb - 1);
      ++counts[idx];
    }
  }
  d.masses.resize(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    d.masses[i] = static_cast<double>(counts[i]) / static_cast<double>(samples.size());
  }
  return d;
}

std::vector<double> sample_values(std::span<const PathSample> samples) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.value);
  return out;
}

}  // namespace vdkernel
