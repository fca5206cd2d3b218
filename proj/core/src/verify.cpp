#include "vdkernel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include <boost/math/distributions/chi_squared.hpp>

#include "vdkernel/errors.hpp"
#include "vdkernel/kernel3d.hpp"
#include "vdkernel/kernels1d.hpp"
#include "vdkernel/stats.hpp"

namespace vdkernel {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string describe(const EPoint& p) {
  switch (p.component()) {
    case Component::Origin:
      return "O";
    case Component::Comp1D:
      return "E2(" + fmt(p.coord1()) + ")";
    case Component::Comp3D: {
      const Vec3& c = p.coords3();
      return "E1(" + fmt(c[0]) + "," + fmt(c[1]) + "," + fmt(c[2]) + ")";
    }
  }
  return "?";
}

void require_time(double t, const char* name) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::InvalidInput,
          std::string(name) + " must be finite and > 0");
}

// Pieces of the model kernel: the killed 3D term (Case i only) and the rest.
struct ModelPieces {
  double q = 0.0;
  double rest = 0.0;
  double err = 0.0;
  CaseTag tag = CaseTag::Case_iv_origin;
};

ModelPieces model_pieces(double t, const EPoint& x_in, const EPoint& y_in,
                         const KernelParams& params, const AnalyticModel& model,
                         const QuadConfig& cfg) {
  require_time(t, "t");
  const bool swap = canonical_less(y_in, x_in);
  const EPoint& x = swap ? y_in : x_in;
  const EPoint& y = swap ? x_in : y_in;
  const KernelParams mp(params.gamma() * model.gamma_scale);
  const double w = model.hitting_weight;
  ModelPieces out;
  out.tag = classify(x, y);
  if (out.tag == CaseTag::Case_iv_origin) {
    const double r = (x.is_origin() ? y : x).radius();
    if (model.origin == OriginFormula::AsPrinted) {
      out.rest = origin_kernel_as_printed(t, r, mp, cfg);
    } else {
      const Kernel1DValue refl = reflected_kernel(t, 0.0, r, mp, cfg);
      out.rest = w * refl.value;
      out.err = w * refl.error_estimate;
    }
    return out;
  }
  const Kernel1DValue refl = reflected_kernel(t, x.radius(), y.radius(), mp, cfg);
  const double killed = killed_halfline_kernel(t, x.radius(), y.radius(), mp).value;
  out.err = w * refl.error_estimate;
  const double hit = w * (refl.value - killed);
  switch (out.tag) {
    case CaseTag::Case_i_3D3D:
      out.q = killed_kernel3d(t, x, y, mp);
      out.rest = hit;
      break;
    case CaseTag::Case_ii_1D1D:
      out.rest = killed + hit;
      break;
    default:
      out.rest = hit;
      break;
  }
  return out;
}

std::vector<double> radial_breaks(std::initializer_list<double> centres, double t) {
  std::vector<double> b;
  const double s = std::sqrt(t);
  for (double c : centres) {
    for (double k : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
      const double v = c + k * s;
      if (v > 0.0) b.push_back(v);
    }
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

Vec3 unit_direction(const EPoint& p) {
  const Vec3& c = p.coords3();
  const double r = p.radius();
  return Vec3{c[0] / r, c[1] / r, c[2] / r};
}

bool collinear(const EPoint& a, const EPoint& b) {
  const Vec3 u = unit_direction(a);
  const Vec3 v = unit_direction(b);
  const Vec3 w{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  return std::hypot(w[0], w[1], w[2]) <= 1e-12;
}

// int_{E1} q_model(t, x, z) m_gamma(dz) with the measure at the true gamma.
QuadResult killed_mass(double t, const EPoint& x, const KernelParams& params,
                       const AnalyticModel& model, const QuadConfig& cfg) {
  if (model.gamma_scale == 1.0) return survival_probability_3d(t, x, params, cfg);
  const KernelParams mp(params.gamma() * model.gamma_scale);
  const auto breaks = radial_breaks({x.radius()}, t);
  const Integrand2 g = [&](double r, double c) {
    return killed_kernel3d(t, x, point_on_cone(x, r, c), mp);
  };
  return integrate_E1_axisymmetric(g, params.gamma(), cfg, breaks);
}

double chi_square_p(double stat, double dof) {
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

// Reports a p-value check so that passed <=> p >= 0.001 follows from the
// abs_error <= tolerance rule.
CheckReport p_value_report(std::string name, double p, std::string details) {
  CheckReport r = make_report(std::move(name), p, 1.0, 0.999, std::move(details));
  return r;
}

std::string scheme_label(const SimPlan& plan) {
  std::string x0;
  if (const EPoint* p = std::get_if<EPoint>(&plan.x0)) {
    x0 = describe(*p);
  } else {
    x0 = fmt(std::get<double>(plan.x0));
  }
  return std::string(to_string(plan.scheme)) + ",x0=" + x0 + ",t=" + fmt(plan.horizon) +
         ",dt=" + fmt(plan.dt) + ",n=" + std::to_string(plan.n_paths);
}

// int_lo^hi g(u) 2 gamma e^{-2 gamma u} du.
double weighted_segment(const Integrand& g, double lo, double hi, double gamma,
                        const QuadConfig& cfg) {
  if (!(hi > lo)) return 0.0;
  const double g2 = 2.0 * gamma;
  const Integrand f = [&](double u) { return g(u) * g2 * std::exp(-g2 * u); };
  return integrate_interval(f, lo, hi, cfg).value;
}

}  // namespace

CheckReport make_report(std::string name, double computed, double reference, double tolerance,
                        std::string details) {
  CheckReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.abs_error = std::abs(computed - reference);
  r.tolerance = tolerance;
  r.passed = r.abs_error <= tolerance;
  r.details = std::move(details);
  return r;
}

double origin_kernel_as_printed(double t, double y_radius, const KernelParams& params,
                                const QuadConfig& cfg) {
  require_time(t, "t");
  require(std::isfinite(y_radius) && y_radius >= 0.0, ErrorCode::InvalidInput,
          "radius must be finite and >= 0");
  const double g = params.gamma();
  const double y = y_radius;
  // |integrand| <= 1.21 s e^{-s^2 t / 2}, whose tail beyond S is
  // 1.21 e^{-S^2 t / 2} / t.
  const double tail = cfg.abs_tol / cfg.truncation_safety;
  const double upper = std::sqrt(2.0 * std::max(1.0, std::log(1.21 / (t * tail))) / t);
  const Integrand f = [=](double s) {
    return s * std::exp(-0.5 * s * s * t) / (s * s + g * g) *
           (s * s * std::cos(s * y) - s * g * std::sin(s * y));
  };
  const auto panels = static_cast<std::size_t>(
      std::clamp(std::ceil(upper * y / (2.0 * std::numbers::pi)), 4.0, 1000.0));
  const double integral = integrate_interval(f, 0.0, upper, cfg, {}, panels).value;
  return 0.5 * (1.0 + std::exp(g * y - g * t * t / 2.0) / (std::numbers::pi * g) * integral);
}

KernelVDValue model_kernel(double t, const EPoint& x, const EPoint& y, const KernelParams& params,
                           const AnalyticModel& model, const QuadConfig& cfg) {
  if (model.is_nominal()) return kernel(t, x, y, params, cfg);
  const ModelPieces p = model_pieces(t, x, y, params, model, cfg);
  return KernelVDValue{p.q + p.rest, p.tag, p.err};
}

CheckReport check_normalization(double t, const EPoint& x, const KernelParams& params,
                                const CheckConfig& cc, double tolerance) {
  require_time(t, "t");
  const double g = params.gamma();
  const auto breaks = radial_breaks({x.radius()}, t);
  const Vec3 axis = x.component() == Component::Comp3D ? unit_direction(x) : Vec3{0.0, 0.0, 1.0};
  QuadResult total;
  std::string how;
  if (x.component() == Component::Comp3D) {
    // The killed part is angle dependent; its mass is the survival
    // probability. Everything else depends on the radius only.
    const QuadResult q = killed_mass(t, x, params, cc.model, cc.outer_cfg.tightened(0.5));
    const Integrand g1 = [&](double r) {
      return model_pieces(t, x, EPoint::in3d_radial(r, axis), params, cc.model, cc.kernel_cfg)
          .rest;
    };
    const Integrand g2 = [&](double u) {
      return model_kernel(t, x, EPoint::in1d(u), params, cc.model, cc.kernel_cfg).value;
    };
    const QuadResult h = integrate_E_rotreduced(g1, g2, g, cc.outer_cfg.tightened(0.5), breaks);
    total = QuadResult{q.value + h.value, q.error_estimate + h.error_estimate, 0.0,
                       q.panels_used + h.panels_used};
    how = "killed mass " + fmt(q.value) + " + hitting mass " + fmt(h.value);
  } else {
    const Integrand g1 = [&](double r) {
      return model_kernel(t, x, EPoint::in3d_radial(r, axis), params, cc.model, cc.kernel_cfg)
          .value;
    };
    const Integrand g2 = [&](double u) {
      return model_kernel(t, x, EPoint::in1d(u), params, cc.model, cc.kernel_cfg).value;
    };
    total = integrate_E_rotreduced(g1, g2, g, cc.outer_cfg, breaks);
    how = "radial reduction";
  }
  return make_report("normalization[t=" + fmt(t) + ",x=" + describe(x) + ",gamma=" + fmt(g) + "]",
                     total.value, 1.0, tolerance,
                     how + "; quadrature error " + fmt(total.error_estimate));
}

CheckReport check_chapman_kolmogorov(double t, double s, const EPoint& x, const EPoint& y,
                                     const KernelParams& params, const CheckConfig& cc,
                                     double tolerance) {
  require_time(t, "t");
  require_time(s, "s");
  const double g = params.gamma();
  std::optional<EPoint> axis_point;
  if (x.component() == Component::Comp3D) axis_point = x;
  if (y.component() == Component::Comp3D) {
    if (axis_point) {
      require(collinear(*axis_point, y), ErrorCode::UnsupportedPattern,
              "3D points off a common line through the origin are not reduced");
    } else {
      axis_point = y;
    }
  }
  const auto breaks = radial_breaks({x.radius(), y.radius()}, std::max(t, s));
  const auto p = [&](double tt, const EPoint& a, const EPoint& b) {
    return model_kernel(tt, a, b, params, cc.model, cc.kernel_cfg).value;
  };
  const Integrand g2 = [&](double u) {
    const EPoint z = EPoint::in1d(u);
    return p(t, x, z) * p(s, z, y);
  };
  QuadResult lhs;
  std::string how;
  if (!axis_point) {
    const Vec3 axis{0.0, 0.0, 1.0};
    const Integrand g1 = [&](double r) {
      const EPoint z = EPoint::in3d_radial(r, axis);
      return p(t, x, z) * p(s, z, y);
    };
    lhs = integrate_E_rotreduced(g1, g2, g, cc.outer_cfg, breaks);
    how = "radial reduction";
  } else {
    const EPoint axis = *axis_point;
    const Integrand2 g1 = [&](double r, double c) {
      const EPoint z = point_on_cone(axis, r, c);
      return p(t, x, z) * p(s, z, y);
    };
    const QuadConfig half = cc.outer_cfg.tightened(0.5);
    const QuadResult a = integrate_E1_axisymmetric(g1, g, half, breaks);
    const QuadResult b = integrate_halfline_weighted(g2, g, half, breaks);
    lhs = QuadResult{a.value + b.value, a.error_estimate + b.error_estimate, 0.0, 0};
    how = "axisymmetric reduction";
  }
  const double rhs = p(t + s, x, y);
  return make_report("chapman_kolmogorov[t=" + fmt(t) + ",s=" + fmt(s) + ",x=" + describe(x) +
                         ",y=" + describe(y) + ",gamma=" + fmt(g) + "]",
                     lhs.value, rhs, tolerance,
                     how + "; quadrature error " + fmt(lhs.error_estimate));
}

CheckReport check_killed_semigroup(double t, double s, const EPoint& x, const EPoint& y,
                                   const KernelParams& params, const CheckConfig& cc,
                                   double tolerance) {
  require_time(t, "t");
  require_time(s, "s");
  require(x.component() == Component::Comp3D && y.component() == Component::Comp3D,
          ErrorCode::InvalidInput, "killed semigroup check needs two points in the 3D part");
  require(collinear(x, y), ErrorCode::UnsupportedPattern,
          "3D points off a common line through the origin are not reduced");
  const KernelParams mp(params.gamma() * cc.model.gamma_scale);
  const Integrand2 g = [&](double r, double c) {
    const EPoint z = point_on_cone(x, r, c);
    return killed_kernel3d(t, x, z, mp) * killed_kernel3d(s, z, y, mp);
  };
  const auto breaks = radial_breaks({x.radius(), y.radius()}, std::min(t, s));
  const QuadResult lhs = integrate_E1_axisymmetric(g, params.gamma(), cc.outer_cfg, breaks);
  const double rhs = killed_kernel3d(t + s, x, y, mp);
  return make_report("killed_semigroup[t=" + fmt(t) + ",s=" + fmt(s) + ",x=" + describe(x) +
                         ",y=" + describe(y) + ",gamma=" + fmt(params.gamma()) + "]",
                     lhs.value, rhs, tolerance, "quadrature error " + fmt(lhs.error_estimate));
}

CheckReport check_convolution_identity(double t, double x, double y, const KernelParams& params,
                                       const CheckConfig& cc, double tolerance) {
  require_time(t, "t");
  require(std::isfinite(x) && x > 0.0 && std::isfinite(y) && y > 0.0, ErrorCode::InvalidInput,
          "x and y must be finite and > 0");
  const KernelParams mp(params.gamma() * cc.model.gamma_scale);
  const double g = mp.gamma();
  // Once t - s < tau_min the Gaussian factor of p^Y(t - s, 0, -y) is below
  // e^{-60}; that end of the time integral is dropped.
  const double tau_min = y * y / 120.0;
  // The m_gamma densities p(., 0, y) and p(t, x, y) with x in the 3D part
  // equal the m-tilde densities p^Y(., 0, -y) and p^Y(t, x, -y).
  const EPoint far = EPoint::in1d(y);
  double lhs = 0.0;
  double err = 0.0;
  if (t > tau_min) {
    // s = x^2 / (2 w) turns the first-passage spike at s = 0 into a tail
    // decaying like e^{-w} / sqrt(w).
    const double w0 = x * x / (2.0 * (t - tau_min));
    const double span = 60.0 + g * x;
    const Integrand f = [&](double w) {
      const double s = x * x / (2.0 * w);
      const double fp = first_passage_density(s, x, mp);
      const double back = model_kernel(t - s, EPoint::origin(), far, params, cc.model,
                                       cc.kernel_cfg).value;
      return fp * back * x * x / (2.0 * w * w);
    };
    const std::array<double, 3> breaks{x * x / (2.0 * 0.75 * t), x * x / t, x * x / (0.5 * t)};
    std::vector<double> inside;
    for (double b : breaks) {
      if (b > w0 && b < w0 + span) inside.push_back(b);
    }
    const QuadResult r = integrate_interval(f, w0, w0 + span, cc.outer_cfg, inside, 8);
    lhs = r.value;
    err = r.error_estimate;
  }
  const double rhs =
      model_kernel(t, EPoint::in3d(0.0, 0.0, x), far, params, cc.model, cc.kernel_cfg).value;
  return make_report("convolution[t=" + fmt(t) + ",x=" + fmt(x) + ",y=" + fmt(y) +
                         ",gamma=" + fmt(params.gamma()) + "]",
                     lhs, rhs, tolerance, "quadrature error " + fmt(err));
}

CheckReport check_origin_continuity(double t, const EPoint& y, const KernelParams& params,
                                    const CheckConfig& cc, double tolerance) {
  require_time(t, "t");
  const EPoint xn = EPoint::in1d(std::ldexp(1.0, -12));
  const double near = model_kernel(t, xn, y, params, cc.model, cc.kernel_cfg).value;
  const double at = model_kernel(t, EPoint::origin(), y, params, cc.model, cc.kernel_cfg).value;
  return make_report("origin_continuity[t=" + fmt(t) + ",y=" + describe(y) +
                         ",gamma=" + fmt(params.gamma()) + "]",
                     near, at, tolerance, "x_n on the half-line at radius 2^-12");
}

CheckReport check_survival_consistency(double t, const EPoint& x, const KernelParams& params,
                                       const CheckConfig& cc, double tolerance) {
  require_time(t, "t");
  const QuadResult surv = killed_mass(t, x, params, cc.model, cc.outer_cfg);
  const double ref = 1.0 - first_passage_cdf(t, x.radius(), params);
  return make_report("survival[t=" + fmt(t) + ",x=" + describe(x) +
                         ",gamma=" + fmt(params.gamma()) + "]",
                     surv.value, ref, tolerance,
                     "quadrature error " + fmt(surv.error_estimate));
}

CheckReport check_equilibrium(double t, const EPoint& x, const EPoint& y,
                              const KernelParams& params, const CheckConfig& cc,
                              double tolerance) {
  require_time(t, "t");
  const double v = model_kernel(t, x, y, params, cc.model, cc.kernel_cfg).value;
  return make_report("equilibrium[t=" + fmt(t) + ",x=" + describe(x) + ",y=" + describe(y) +
                         ",gamma=" + fmt(params.gamma()) + "]",
                     v, 0.5, tolerance, "m_gamma(E) = 2");
}

std::vector<double> default_mc_edges(const SimPlan& plan, const KernelParams& params) {
  const double g = params.gamma();
  const double s = std::sqrt(plan.horizon);
  const double y0 = plan.start_value();
  const double step = std::min(0.1, s / 4.0);
  const double core = std::abs(y0) + 3.0 * s + 1.0 / g;
  const double outer = std::abs(y0) + 6.0 * s + 4.0 / g;
  const double far = outer + 10.0 * s + 20.0 / g;
  std::vector<double> pos;  // positive edges, increasing, excluding 0
  const auto n_core = static_cast<int>(std::ceil(core / step));
  for (int i = 1; i <= n_core; ++i) pos.push_back(step * i);
  const double wide = 5.0 * step;
  while (pos.back() + wide < outer) pos.push_back(pos.back() + wide);
  pos.push_back(far);
  std::vector<double> edges;
  if (plan.scheme != Scheme::Reflected) {
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) edges.push_back(-*it);
  }
  edges.push_back(0.0);
  edges.insert(edges.end(), pos.begin(), pos.end());
  return edges;
}

double analytic_bin_probability(const SimPlan& plan, double t, const EPoint& x, double a,
                                double b, const KernelParams& params, const CheckConfig& cc) {
  require(a < b, ErrorCode::InvalidInput, "bin must have a < b");
  const double g = params.gamma();
  const QuadConfig& cfg = cc.outer_cfg;
  const auto p = [&](const EPoint& z) {
    return model_kernel(t, x, z, params, cc.model, cc.kernel_cfg).value;
  };
  const auto mass_line = [&](double lo, double hi) {
    return weighted_segment([&](double u) { return p(EPoint::in1d(u)); }, lo, hi, g, cfg);
  };
  const auto mass_shell = [&](double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    if (x.component() != Component::Comp3D) {
      return weighted_segment([&](double r) { return p(EPoint::in3d_radial(r, {0.0, 0.0, 1.0})); },
                              lo, hi, g, cfg);
    }
    const QuadConfig inner = cfg.tightened(0.25);
    const Integrand angular_mean = [&](double r) {
      const Integrand h = [&](double c) { return 0.5 * p(point_on_cone(x, r, c)); };
      return integrate_interval(h, -1.0, 1.0, inner, {}, 2).value;
    };
    return weighted_segment(angular_mean, lo, hi, g, cfg);
  };
  if (plan.scheme == Scheme::Reflected) {
    const double lo = std::max(a, 0.0);
    return mass_shell(lo, b) + mass_line(lo, b);
  }
  return mass_shell(std::max(a, 0.0), b) + mass_line(std::max(-b, 0.0), -a);
}

CheckReport check_mc_agreement(const SimPlan& plan, double t, const EPoint& x,
                               const KernelParams& params, const CheckConfig& cc) {
  require(plan.n_paths >= 10'000, ErrorCode::InsufficientSamples,
          "Monte Carlo comparison needs at least 1e4 paths");
  const std::vector<PathSample> samples = simulate(plan, params);
  return check_mc_agreement(samples, plan, t, x, params, cc);
}

CheckReport check_mc_agreement(std::span<const PathSample> samples, const SimPlan& plan, double t,
                               const EPoint& x, const KernelParams& params,
                               const CheckConfig& cc) {
  require(plan.n_paths >= 10'000 && samples.size() >= 10'000, ErrorCode::InsufficientSamples,
          "Monte Carlo comparison needs at least 1e4 paths");
  require(samples.size() == plan.n_paths, ErrorCode::InvalidPlan,
          "sample count does not match the plan");
  require(plan.horizon == t, ErrorCode::InvalidPlan, "plan horizon differs from t");
  require(plan.record != RecordMode::FirstPassage, ErrorCode::InvalidPlan,
          "stopped paths cannot be compared with the transition density");
  const double start = plan.start_value();
  const double want = plan.scheme == Scheme::Reflected ? x.radius() : signed_radial(x);
  require(std::abs((plan.scheme == Scheme::Reflected ? std::abs(start) : start) - want) <= 1e-12,
          ErrorCode::InvalidPlan, "plan start differs from x");

  const std::vector<double> edges = default_mc_edges(plan, params);
  const std::vector<double> values = sample_values(samples);
  const MeasureTag tag = plan.scheme == Scheme::Reflected ? MeasureTag::MPlus : MeasureTag::MTilde;
  const EmpiricalDensity emp = empirical_density(values, edges, tag, params);
  const double n = static_cast<double>(values.size());
  std::vector<double> observed(emp.masses.size());
  std::vector<double> expected(emp.masses.size());
  for (std::size_t i = 0; i < observed.size(); ++i) {
    observed[i] = std::round(emp.masses[i] * n);
    const double prob = analytic_bin_probability(plan, t, x, edges[i], edges[i + 1], params, cc);
    // Far-tail bins can come out a rounding error below zero.
    require(prob > -1e-9, ErrorCode::NoConvergence,
            "negative analytic bin probability " + fmt(prob));
    expected[i] = n * std::max(prob, 0.0);
  }
  observed.front() += static_cast<double>(emp.underflow);
  observed.back() += static_cast<double>(emp.overflow);
  const ChiSquareResult chi = chi_square_test(observed, expected, 20.0);
  return p_value_report("mc_agreement[" + scheme_label(plan) + ",gamma=" + fmt(params.gamma()) +
                            "]",
                        chi.p_value,
                        "chi2 " + fmt(chi.statistic) + " on " + std::to_string(chi.dof) +
                            " dof; passes when p >= 0.001");
}

CheckReport check_origin_bin(std::span<const PathSample> samples, const SimPlan& plan,
                             double half_width, const KernelParams& params,
                             const CheckConfig& cc) {
  require(samples.size() >= 10'000, ErrorCode::InsufficientSamples,
          "Monte Carlo comparison needs at least 1e4 paths");
  require(plan.scheme != Scheme::Reflected && plan.start_value() == 0.0, ErrorCode::InvalidPlan,
          "origin bin check needs signed or full samples started at the origin");
  require(std::isfinite(half_width) && half_width > 0.0, ErrorCode::InvalidInput,
          "half_width must be > 0");
  const double n = static_cast<double>(samples.size());
  double count = 0.0;
  for (const auto& s : samples) count += std::abs(s.value) <= half_width ? 1.0 : 0.0;
  const double t = plan.horizon;
  const double g = params.gamma();
  const Integrand both = [&](double r) {
    const double e1 = model_kernel(t, EPoint::origin(), EPoint::in3d_radial(r, {0.0, 0.0, 1.0}),
                                   params, cc.model, cc.kernel_cfg)
                          .value;
    const double e2 =
        model_kernel(t, EPoint::origin(), EPoint::in1d(r), params, cc.model, cc.kernel_cfg).value;
    return e1 + e2;
  };
  const double prob = weighted_segment(both, 0.0, half_width, g, cc.outer_cfg);
  const double expected = n * prob;
  const double d = count - expected;
  const double stat = d * d / (expected * (1.0 - prob));
  const double pval = chi_square_p(stat, 1.0);
  const double empirical_density = count / n / (2.0 * -std::expm1(-2.0 * g * half_width));
  const double model_density = prob / (2.0 * -std::expm1(-2.0 * g * half_width));
  return p_value_report("origin_bin[" + scheme_label(plan) + ",width=" + fmt(2.0 * half_width) +
                            "]",
                        pval,
                        "empirical density " + fmt(empirical_density) + ", model " +
                            fmt(model_density) + ", chi2 " + fmt(stat) + " on 1 dof");
}

std::vector<CheckReport> run_suite(Suite suite, std::uint64_t seed) {
  std::vector<CheckReport> out;
  const CheckConfig cc{};
  const bool full = suite == Suite::Full;
  const std::vector<double> times = full ? std::vector<double>{0.1, 1.0, 10.0}
                                         : std::vector<double>{1.0};
  const std::vector<double> gammas = full ? std::vector<double>{0.5, 1.0, 2.0}
                                          : std::vector<double>{1.0};
  const std::vector<EPoint> starts{EPoint::origin(), EPoint::in1d(1.0),
                                   EPoint::in3d(1.0, 0.0, 0.0)};
  for (double g : gammas) {
    const KernelParams params(g);
    for (double t : times) {
      for (const EPoint& x : starts) out.push_back(check_normalization(t, x, params, cc));
    }
  }

  const KernelParams unit(1.0);
  out.push_back(check_chapman_kolmogorov(0.5, 0.5, EPoint::origin(), EPoint::origin(), unit, cc));
  out.push_back(
      check_chapman_kolmogorov(0.2, 1.0, EPoint::in1d(1.0), EPoint::in1d(0.5), unit, cc));
  if (full) {
    out.push_back(
        check_chapman_kolmogorov(0.5, 0.5, EPoint::in1d(0.5), EPoint::origin(), unit, cc));
    out.push_back(
        check_chapman_kolmogorov(0.2, 1.0, EPoint::origin(), EPoint::in1d(2.0), unit, cc));
  }
  out.push_back(check_killed_semigroup(0.5, 0.5, EPoint::in3d(1.0, 0.0, 0.0),
                                       EPoint::in3d(0.5, 0.0, 0.0), unit, cc));
  out.push_back(check_convolution_identity(1.0, 1.0, 1.0, unit, cc));
  if (full) {
    out.push_back(check_convolution_identity(2.0, 0.5, 1.5, unit, cc));
    out.push_back(check_convolution_identity(0.5, 1.0, 0.5, unit, cc));
  }
  out.push_back(check_survival_consistency(1.0, EPoint::in3d(1.0, 0.0, 0.0), unit, cc));
  out.push_back(check_origin_continuity(1.0, EPoint::in1d(1.0), unit, cc));
  out.push_back(check_origin_continuity(1.0, EPoint::origin(), unit, cc));
  out.push_back(check_equilibrium(50.0, EPoint::origin(), EPoint::in3d(1.0, 0.0, 0.0), unit, cc));
  out.push_back(check_equilibrium(50.0, EPoint::in1d(1.0), EPoint::in1d(2.0), unit, cc));

  SimPlan plan;
  plan.horizon = 1.0;
  plan.dt = 1e-3;
  plan.n_paths = full ? 100'000 : 20'000;
  plan.seed = seed;
  plan.scheme = Scheme::Signed;
  plan.x0 = 0.0;
  out.push_back(check_mc_agreement(plan, 1.0, EPoint::origin(), unit, cc));
  if (full) {
    plan.x0 = 1.0;
    out.push_back(check_mc_agreement(plan, 1.0, EPoint::in3d(0.0, 0.0, 1.0), unit, cc));
    plan.scheme = Scheme::Reflected;
    out.push_back(check_mc_agreement(plan, 1.0, EPoint::in1d(1.0), unit, cc));
    plan.scheme = Scheme::FullSkewProduct;
    plan.x0 = EPoint::in3d(1.0, 0.0, 0.0);
    out.push_back(check_mc_agreement(plan, 1.0, EPoint::in3d(1.0, 0.0, 0.0), unit, cc));
  }
  return out;
}

}  // namespace vdkernel
