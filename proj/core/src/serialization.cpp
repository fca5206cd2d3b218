#include "vdkernel/serialization.hpp"

#include <cmath>

#include "vdkernel/errors.hpp"

namespace vdkernel {

using nlohmann::json;

namespace {

template <class F>
auto guarded(ErrorCode code, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(code, e.what());
  }
}

template <class Enum, std::size_t N>
Enum enum_from(const json& j, const char* field, const std::array<Enum, N>& options) {
  const std::string s = j.at(field).get<std::string>();
  for (Enum e : options) {
    if (to_string(e) == s) return e;
  }
  throw Error(ErrorCode::InvalidPlan, std::string("unknown ") + field + " '" + s + "'");
}

}  // namespace

json to_json(const EPoint& p) {
  json j;
  j["component"] = std::string(to_string(p.component()));
  if (p.component() == Component::Comp3D) {
    const Vec3& c = p.coords3();
    j["coords"] = {c[0], c[1], c[2]};
  } else if (p.component() == Component::Comp1D) {
    j["coords"] = {p.coord1()};
  }
  return j;
}

EPoint epoint_from_json(const json& j) {
  return guarded(ErrorCode::InvalidInput, [&]() {
    require(j.is_object(), ErrorCode::InvalidInput, "a point must be a JSON object");
    const std::string comp = j.at("component").get<std::string>();
    if (comp == "O") return EPoint::origin();
    const auto coords = j.at("coords").get<std::vector<double>>();
    if (comp == "E2") {
      require(coords.size() == 1, ErrorCode::InvalidInput, "E2 point needs one coordinate");
      return EPoint::in1d(coords[0]);
    }
    if (comp == "E1") {
      require(coords.size() == 3, ErrorCode::InvalidInput, "E1 point needs three coordinates");
      return EPoint::in3d(coords[0], coords[1], coords[2]);
    }
    throw Error(ErrorCode::InvalidInput, "unknown component '" + comp + "'");
  });
}

EPoint parse_epoint(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::InvalidInput, "point is not valid JSON: " + text);
  return epoint_from_json(j);
}

json to_json(const SimPlan& plan) {
  json j;
  j["scheme"] = std::string(to_string(plan.scheme));
  if (const EPoint* p = std::get_if<EPoint>(&plan.x0)) {
    j["x0"] = to_json(*p);
  } else {
    j["x0"] = std::get<double>(plan.x0);
  }
  j["t"] = plan.horizon;
  j["dt"] = plan.dt;
  j["n_paths"] = plan.n_paths;
  j["seed"] = plan.seed;
  j["record"] = std::string(to_string(plan.record));
  j["clock_cap"] = plan.clock_cap;
  j["threads"] = plan.threads;
  return j;
}

SimPlan simplan_from_json(const json& j) {
  return guarded(ErrorCode::InvalidPlan, [&]() {
    require(j.is_object(), ErrorCode::InvalidPlan, "a plan must be a JSON object");
    SimPlan plan;
    plan.scheme = enum_from(j, "scheme",
                            std::array{Scheme::Signed, Scheme::Reflected, Scheme::FullSkewProduct});
    const json& x0 = j.at("x0");
    if (x0.is_number()) {
      plan.x0 = x0.get<double>();
    } else {
      plan.x0 = epoint_from_json(x0);
    }
    plan.horizon = j.at("t").get<double>();
    plan.dt = j.at("dt").get<double>();
    plan.n_paths = j.at("n_paths").get<std::uint64_t>();
    plan.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("record")) {
      plan.record = enum_from(
          j, "record",
          std::array{RecordMode::EndpointOnly, RecordMode::FullPath, RecordMode::FirstPassage});
    }
    plan.clock_cap = j.value("clock_cap", plan.clock_cap);
    plan.threads = j.value("threads", 0u);
    plan.validate();
    return plan;
  });
}

json to_json(const CheckReport& r) {
  // JSON has no NaN or infinity; such values are written as null.
  const auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  return json{{"name", r.name},           {"computed", num(r.computed)},
              {"reference", num(r.reference)}, {"abs_error", num(r.abs_error)},
              {"tolerance", num(r.tolerance)}, {"passed", r.passed},
              {"details", r.details}};
}

std::string to_json_line(const CheckReport& r) { return to_json(r).dump(); }

}  // namespace vdkernel
