#include <gtest/gtest.h>

#include <cmath>

#include "vdkernel/errors.hpp"
#include "vdkernel/kernels1d.hpp"
#include "vdkernel/simulate.hpp"
#include "vdkernel/stats.hpp"

using namespace vdkernel;

namespace {

SimPlan plan_for(Scheme scheme, std::variant<EPoint, double> x0, std::uint64_t n,
                 std::uint64_t seed, double t = 1.0, double dt = 1e-3) {
  SimPlan p;
  p.scheme = scheme;
  p.x0 = x0;
  p.horizon = t;
  p.dt = dt;
  p.n_paths = n;
  p.seed = seed;
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no vdkernel::Error thrown";
  return ErrorCode::InvalidInput;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

const KernelParams kG1(1.0);

}  // namespace

TEST(SimPlan, Validation) {
  SimPlan p = plan_for(Scheme::Signed, 0.0, 10, 0);
  p.dt = 2.0;
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::InvalidPlan);
  p = plan_for(Scheme::Signed, 0.0, 10, 0);
  p.horizon = -1.0;
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::InvalidPlan);
  p = plan_for(Scheme::Reflected, -1.0, 10, 0);
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::InvalidPlan);
  p = plan_for(Scheme::Signed, 0.0, 10, 0, 100.0, 1e-8);
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::ResourceGuard);
  p = plan_for(Scheme::Signed, 0.0, 1'000'000, 0, 1.0, 1e-4);
  p.record = RecordMode::FullPath;
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::ResourceGuard);
  p = plan_for(Scheme::Signed, 0.0, 0, 0);
  EXPECT_EQ(code_of([&] { simulate(p, kG1); }), ErrorCode::InvalidPlan);
}

TEST(SimPlan, StepCountRoundsUpAndAbsorbsRoundingNoise) {
  EXPECT_EQ(plan_for(Scheme::Signed, 0.0, 1, 0, 1.0, 1e-3).steps(), 1000u);
  EXPECT_EQ(plan_for(Scheme::Signed, 0.0, 1, 0, 0.3, 0.1).steps(), 3u);
  EXPECT_EQ(plan_for(Scheme::Signed, 0.0, 1, 0, 1.0, 0.3).steps(), 4u);
  EXPECT_EQ(plan_for(Scheme::Signed, EPoint::in1d(2.0), 1, 0).start_value(), -2.0);
}

TEST(Simulate, DeterministicAcrossWorkerCounts) {
  for (Scheme s : {Scheme::Signed, Scheme::Reflected, Scheme::FullSkewProduct}) {
    SimPlan a = plan_for(s, 0.5, 3000, 17, 0.5, 1e-3);
    a.threads = 1;
    SimPlan b = a;
    b.threads = 3;
    const auto ra = simulate(a, kG1), rb = simulate(b, kG1);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      ASSERT_EQ(ra[i].value, rb[i].value);
      ASSERT_EQ(ra[i].endpoint, rb[i].endpoint);
    }
  }
}

TEST(Simulate, SeedChangesTheSample) {
  const auto a = simulate(plan_for(Scheme::Signed, 0.0, 100, 1), kG1);
  const auto b = simulate(plan_for(Scheme::Signed, 0.0, 100, 2), kG1);
  int same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i].value == b[i].value;
  EXPECT_LT(same, 3);
}

TEST(Simulate, SignedFromZeroIsSymmetric) {
  const auto s = simulate(plan_for(Scheme::Signed, 0.0, 20000, 3), kG1);
  double pos = 0.0;
  for (const auto& p : s) pos += p.value > 0.0;
  const double n = static_cast<double>(s.size());
  EXPECT_NEAR(pos / n, 0.5, 5.0 * 0.5 / std::sqrt(n));
}

TEST(Simulate, StationaryMeanOfTheRadius) {
  // |Y| is eventually exponential with rate 2 gamma.
  for (double g : {1.0, 2.0}) {
    const auto s = simulate(plan_for(Scheme::Reflected, 1.0, 20000, 4, 20.0 / (g * g), 1e-2 / (g * g)),
                            KernelParams(g));
    EXPECT_NEAR(mean(sample_values(s)), 1.0 / (2.0 * g), 0.02 / g);
  }
}

TEST(Simulate, ReflectedMatchesAbsoluteSigned) {
  auto r = sample_values(simulate(plan_for(Scheme::Reflected, 0.5, 20000, 5), kG1));
  auto s = sample_values(simulate(plan_for(Scheme::Signed, 0.5, 20000, 6), kG1));
  for (double& v : s) v = std::abs(v);
  EXPECT_GT(ks_two_sample(r, s).p_value, 0.001);
}

TEST(Simulate, ReflectedLocalTime) {
  const double x0 = 0.3, t = 1.0;
  const auto s = simulate(plan_for(Scheme::Reflected, x0, 20000, 7, t), kG1);
  std::vector<double> drift_removed;
  for (const auto& p : s) {
    ASSERT_GE(p.value, 0.0);
    ASSERT_GE(p.local_time_accum, 0.0);
    ASSERT_FALSE(p.endpoint.has_value());
    if (!p.hit_origin) ASSERT_EQ(p.local_time_accum, 0.0);
    drift_removed.push_back(p.value - p.local_time_accum);
  }
  // Yhat_t - L_t = x0 + W_t - gamma t.
  EXPECT_NEAR(mean(drift_removed), x0 - t, 5.0 * std::sqrt(t / 20000.0));
}

TEST(Simulate, FullSchemeRadiusFollowsTheSignedChain) {
  const auto f = simulate(plan_for(Scheme::FullSkewProduct, 0.8, 2000, 8), kG1);
  const auto s = simulate(plan_for(Scheme::Signed, 0.8, 2000, 8), kG1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    ASSERT_EQ(f[i].value, s[i].value);
    ASSERT_EQ(f[i].hit_origin, s[i].hit_origin);
    ASSERT_TRUE(f[i].endpoint.has_value());
    EXPECT_NEAR(signed_radial(*f[i].endpoint), f[i].value, 1e-12);
  }
}

TEST(Simulate, DirectionIsUniformAfterVisitingTheOrigin) {
  const auto f = simulate(plan_for(Scheme::FullSkewProduct, EPoint::in3d(0.0, 0.0, 0.3), 20000, 9),
                          kG1);
  double sum = 0.0, far_sum = 0.0;
  int n = 0, far_n = 0;
  for (const auto& p : f) {
    if (!p.endpoint || p.endpoint->component() != Component::Comp3D) continue;
    const double cz = p.endpoint->coords3()[2] / p.endpoint->radius();
    if (p.hit_origin) {
      sum += cz;
      ++n;
    } else {
      far_sum += cz;
      ++far_n;
    }
  }
  ASSERT_GT(n, 1000);
  EXPECT_NEAR(sum / n, 0.0, 5.0 / std::sqrt(3.0 * n));
  // Paths that stayed in the 3D part remember where they started.
  ASSERT_GT(far_n, 100);
  EXPECT_GT(far_sum / far_n, 0.1);
}

TEST(Simulate, ClockOverflow) {
  SimPlan p = plan_for(Scheme::FullSkewProduct, 0.1, 10, 0, 0.01, 1e-3);
  p.clock_cap = INFINITY;
  p.clock_guard = 1e-3;
  EXPECT_EQ(code_of([&] { simulate(p, kG1); }), ErrorCode::ClockOverflow);
}

TEST(Simulate, RecordModes) {
  SimPlan p = plan_for(Scheme::Signed, 0.5, 50, 10, 0.3, 0.1);
  p.record = RecordMode::FullPath;
  for (const auto& s : simulate(p, kG1)) {
    ASSERT_EQ(s.trajectory.size(), 4u);
    EXPECT_EQ(s.trajectory.front(), 0.5);
    EXPECT_EQ(s.trajectory.back(), s.value);
  }
  p = plan_for(Scheme::Signed, 0.2, 2000, 11);
  p.record = RecordMode::FirstPassage;
  int hits = 0;
  for (const auto& s : simulate(p, kG1)) {
    if (!s.hit_origin) continue;
    ++hits;
    ASSERT_TRUE(s.first_passage_time.has_value());
    EXPECT_GT(*s.first_passage_time, 0.0);
    EXPECT_LE(*s.first_passage_time, 1.0);
    EXPECT_TRUE(s.endpoint->is_origin());
    EXPECT_EQ(s.value, 0.0);
  }
  EXPECT_GT(hits, 1000);
}

TEST(FirstPassageSampler, InverseGaussianLaw) {
  for (double x : {0.5, 2.0}) {
    const auto s = sample_first_passage(x, kG1, 20000, 12);
    // Mean x / gamma, variance x / gamma^3.
    EXPECT_NEAR(mean(s), x, 5.0 * std::sqrt(x / 20000.0));
    EXPECT_GT(ks_one_sample(s, [&](double u) { return first_passage_cdf(u, x, kG1); }).p_value,
              0.001);
  }
  EXPECT_EQ(sample_first_passage(1.0, kG1, 10, 3), sample_first_passage(1.0, kG1, 10, 3));
}

TEST(FirstPassageSampler, EulerHittingTimesAgree) {
  SimPlan p = plan_for(Scheme::Signed, 1.0, 20000, 13, 3.0, 1e-4 * 3);
  std::vector<double> hit;
  for (const auto& s : simulate(p, kG1)) {
    if (s.first_passage_time) hit.push_back(*s.first_passage_time);
  }
  // Fraction hit by time 3.
  EXPECT_NEAR(static_cast<double>(hit.size()) / 20000.0, first_passage_cdf(3.0, 1.0, kG1), 0.02);
}

TEST(EmpiricalDensity, BinsAndDensities) {
  const std::vector<double> samples{0.1, 0.2, 0.6, 1.0, 1.5, -0.5};
  const std::vector<double> edges{0.0, 0.5, 1.0};
  const EmpiricalDensity d = empirical_density(samples, edges, MeasureTag::Lebesgue, kG1);
  ASSERT_EQ(d.masses.size(), 2u);
  EXPECT_DOUBLE_EQ(d.masses[0], 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(d.masses[1], 2.0 / 6.0);
  EXPECT_EQ(d.underflow, 1u);
  EXPECT_EQ(d.overflow, 1u);
  EXPECT_DOUBLE_EQ(d.density(0), (2.0 / 6.0) / 0.5);

  const EmpiricalDensity w = empirical_density(samples, edges, MeasureTag::MPlus, kG1);
  EXPECT_NEAR(w.density(0), (2.0 / 6.0) / (1.0 - std::exp(-1.0)), 1e-15);

  const std::vector<double> unsorted{0.0, 1.0, 0.5}, empty;
  EXPECT_EQ(code_of([&] { empirical_density(samples, unsorted, MeasureTag::Lebesgue, kG1); }),
            ErrorCode::UnsortedEdges);
  EXPECT_EQ(code_of([&] { empirical_density(empty, edges, MeasureTag::Lebesgue, kG1); }),
            ErrorCode::EmptySample);
}
