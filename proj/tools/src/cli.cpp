#include "vdkernel_cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vdkernel/errors.hpp"
#include "vdkernel/kernelvd.hpp"
#include "vdkernel/serialization.hpp"
#include "vdkernel/simulate.hpp"
#include "vdkernel/verify.hpp"

namespace vdkernel::cli {

namespace {

using nlohmann::json;

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == item.size() && !item.empty(), ErrorCode::InvalidInput,
            std::string("bad number '") + item + "' in " + what);
    out.push_back(v);
  }
  require(!out.empty(), ErrorCode::InvalidInput, std::string(what) + " is empty");
  return out;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// Output sink: the --out file when given, otherwise `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary);
      require(file_.good(), ErrorCode::InvalidInput, "cannot open output file " + *path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string read_plan_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  require(in.good(), ErrorCode::InvalidInput, "plan is neither JSON nor a readable file: " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string component_label(const PathSample& s, Scheme scheme) {
  if (scheme == Scheme::Reflected || !s.endpoint) return "R+";
  return std::string(to_string(s.endpoint->component()));
}

std::string r_or_coords(const PathSample& s, Scheme scheme) {
  if (scheme == Scheme::Reflected || !s.endpoint) return csv_number(s.value);
  const EPoint& p = *s.endpoint;
  switch (p.component()) {
    case Component::Origin:
      return csv_number(0.0);
    case Component::Comp1D:
      return csv_number(p.coord1());
    case Component::Comp3D: {
      const Vec3& c = p.coords3();
      return csv_number(c[0]) + ";" + csv_number(c[1]) + ";" + csv_number(c[2]);
    }
  }
  return "";
}

EPoint table_point(const std::string& which, double r) {
  if (r == 0.0) return EPoint::origin();
  if (which == "3d") return EPoint::in3d(r, 0.0, 0.0);
  return EPoint::in1d(r);
}

struct Options {
  CliConfig cfg;
  std::string format = "json";
  // eval
  double t = 0.0;
  std::string x;
  std::string y;
  // table
  std::string t_list = "0.1,1,10";
  std::string radius_grid = "0.5,1,2";
  std::string cases = "i,ii,iii,iv";
  // verify
  std::string suite = "fast";
  std::uint64_t seed = 0;
  // simulate
  std::string plan;
  bool gamma_given = false;
};

int do_eval(const Options& o, std::ostream& out) {
  const KernelParams params(o.cfg.gamma);
  const EPoint x = parse_epoint(o.x);
  const EPoint y = parse_epoint(o.y);
  const KernelVDValue v = kernel(o.t, x, y, params, o.cfg.quad);
  Sink sink(o.cfg.out_path, out);
  if (o.cfg.output_format == OutputFormat::csv) {
    sink.get() << "value,error_estimate,case\n"
               << csv_number(v.value) << ',' << csv_number(v.error_estimate) << ','
               << short_label(v.case_tag) << '\n';
  } else {
    const json j{{"value", v.value},
                 {"error_estimate", v.error_estimate},
                 {"case", std::string(short_label(v.case_tag))},
                 {"case_tag", std::string(to_string(v.case_tag))}};
    sink.get() << j.dump() << '\n';
  }
  return kExitOk;
}

int do_table(const Options& o, std::ostream& out) {
  const KernelParams params(o.cfg.gamma);
  const std::vector<double> times = parse_list(o.t_list, "--t-list");
  const std::vector<double> radii = parse_list(o.radius_grid, "--radius-grid");
  for (double r : radii) {
    require(std::isfinite(r) && r > 0.0, ErrorCode::InvalidInput, "radii must be > 0");
  }
  const std::vector<std::string> cases = split_words(o.cases);
  for (const auto& c : cases) {
    require(c == "i" || c == "ii" || c == "iii" || c == "iv", ErrorCode::InvalidInput,
            "unknown case '" + c + "' (expected i, ii, iii, iv)");
  }
  Sink sink(o.cfg.out_path, out);
  std::ostream& s = sink.get();
  s << "t,case,rx,ry,value,err\n";
  for (double t : times) {
    for (const auto& c : cases) {
      // Case i: both on the positive x axis of the 3D part; ii: both on the
      // half-line; iii: x in 3D, y on the half-line; iv: x at the origin,
      // y on the half-line.
      const std::string xs = (c == "i" || c == "iii") ? "3d" : "1d";
      const std::string ys = c == "i" ? "3d" : "1d";
      const std::vector<double> xr = c == "iv" ? std::vector<double>{0.0} : radii;
      for (double rx : xr) {
        for (double ry : radii) {
          const KernelVDValue v =
              kernel(t, table_point(xs, rx), table_point(ys, ry), params, o.cfg.quad);
          s << csv_number(t) << ',' << c << ',' << csv_number(rx) << ',' << csv_number(ry) << ','
            << csv_number(v.value) << ',' << csv_number(v.error_estimate) << '\n';
        }
      }
    }
  }
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const Suite suite = o.suite == "full" ? Suite::Full : Suite::Fast;
  const std::vector<CheckReport> reports = run_suite(suite, o.seed);
  Sink sink(o.cfg.out_path, out);
  bool all = true;
  for (const auto& r : reports) {
    sink.get() << to_json_line(r) << '\n';
    all = all && r.passed;
  }
  return all ? kExitOk : kExitCheckFailed;
}

int do_simulate(const Options& o, std::ostream& out) {
  const json j = json::parse(read_plan_text(o.plan), nullptr, false);
  require(!j.is_discarded(), ErrorCode::InvalidInput, "plan is not valid JSON");
  SimPlan plan = simplan_from_json(j);
  if (plan.threads == 0) plan.threads = default_worker_count();
  double gamma = o.cfg.gamma;
  if (!o.gamma_given && j.contains("gamma")) gamma = j.at("gamma").get<double>();
  const KernelParams params(gamma);
  const std::vector<PathSample> samples = simulate(plan, params);
  Sink sink(o.cfg.out_path, out);
  std::ostream& s = sink.get();
  s << "path_id,component,r_or_coords,hit_origin,first_passage_time\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const PathSample& p = samples[i];
    s << i << ',' << component_label(p, plan.scheme) << ',' << r_or_coords(p, plan.scheme) << ','
      << (p.hit_origin ? 1 : 0) << ','
      << (p.first_passage_time ? csv_number(*p.first_passage_time) : std::string()) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Transition densities of distorted Brownian motion on R^3 glued to a half-line",
               "vdkernel"};
  app.require_subcommand(1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gamma", o.cfg.gamma, "distortion parameter gamma > 0");
    sub->add_option("--abs-tol", o.cfg.quad.abs_tol, "quadrature absolute tolerance");
    sub->add_option("--rel-tol", o.cfg.quad.rel_tol, "quadrature relative tolerance");
    sub->add_option("--out", o.cfg.out_path, "write results to this file instead of stdout");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate p(t, x, y)");
  add_common(eval);
  eval->add_option("--t", o.t, "time t > 0")->required();
  eval->add_option("--x", o.x, "point as JSON, e.g. {\"component\":\"E1\",\"coords\":[1,0,0]}")
      ->required();
  eval->add_option("--y", o.y, "point as JSON")->required();
  eval->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* table = app.add_subcommand("table", "CSV table of p over times, radii and cases");
  add_common(table);
  table->add_option("--t-list", o.t_list, "comma-separated times");
  table->add_option("--radius-grid", o.radius_grid, "comma-separated radii > 0");
  table->add_option("--cases", o.cases, "subset of i,ii,iii,iv");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", o.suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", o.seed, "Monte Carlo seed");
  verify->add_option("--out", o.cfg.out_path, "write reports to this file");

  CLI::App* sim = app.add_subcommand("simulate", "simulate endpoints of a plan");
  add_common(sim);
  sim->add_option("--plan", o.plan, "plan as JSON text or a path to a JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  o.gamma_given = sim->count("--gamma") > 0;
  o.cfg.output_format = o.format == "csv" ? OutputFormat::csv : OutputFormat::json;

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == eval) return do_eval(o, out);
    if (chosen == table) return do_table(o, out);
    if (chosen == verify) return do_verify(o, out);
    return do_simulate(o, out);
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << "error: " << e.what() << "\n\n" << chosen->help();
      return kExitUsage;
    }
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace vdkernel::cli
