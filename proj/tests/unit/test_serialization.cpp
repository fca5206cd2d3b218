#include <gtest/gtest.h>

#include <cmath>

#include "vdkernel/errors.hpp"
#include "vdkernel/serialization.hpp"

using namespace vdkernel;
using nlohmann::json;

TEST(PointJson, RoundTrip) {
  for (const EPoint& p : {EPoint::origin(), EPoint::in1d(2.5), EPoint::in3d(0.1, -0.2, 3.0)}) {
    EXPECT_EQ(epoint_from_json(to_json(p)), p);
    EXPECT_EQ(parse_epoint(to_json(p).dump()), p);
  }
  EXPECT_EQ(to_json(EPoint::in1d(2.0)).dump(), R"({"component":"E2","coords":[2.0]})");
}

TEST(PointJson, Malformed) {
  for (const char* bad : {"", "{", R"({"component":"E3","coords":[1]})",
                          R"({"component":"E1","coords":[1,2]})", R"({"component":"E2"})",
                          R"({"component":"E2","coords":[-1]})", R"([1,2,3])",
                          R"({"component":"E1","coords":["a","b","c"]})"}) {
    try {
      parse_epoint(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << bad;
    }
  }
}

TEST(PlanJson, RoundTrip) {
  SimPlan p;
  p.scheme = Scheme::FullSkewProduct;
  p.x0 = EPoint::in3d(1.0, 0.0, 0.0);
  p.horizon = 2.0;
  p.dt = 0.01;
  p.n_paths = 123;
  p.seed = 0xdeadbeefcafeULL;
  p.record = RecordMode::FullPath;
  p.clock_cap = 50.0;
  p.threads = 2;
  const SimPlan q = simplan_from_json(to_json(p));
  EXPECT_EQ(q.scheme, p.scheme);
  EXPECT_EQ(std::get<EPoint>(q.x0), std::get<EPoint>(p.x0));
  EXPECT_EQ(q.horizon, p.horizon);
  EXPECT_EQ(q.dt, p.dt);
  EXPECT_EQ(q.n_paths, p.n_paths);
  EXPECT_EQ(q.seed, p.seed);
  EXPECT_EQ(q.record, p.record);
  EXPECT_EQ(q.clock_cap, p.clock_cap);
  EXPECT_EQ(q.threads, p.threads);

  const SimPlan s = simplan_from_json(json::parse(R"({"scheme":"Signed","x0":-0.5,"t":1,"dt":0.01,"n_paths":5})"));
  EXPECT_EQ(std::get<double>(s.x0), -0.5);
}

TEST(PlanJson, Invalid) {
  const auto code = [](const char* text) {
    try {
      simplan_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoConvergence;
  };
  EXPECT_EQ(code(R"({"scheme":"Euler"})"), ErrorCode::InvalidPlan);
  EXPECT_EQ(code(R"({"scheme":"Signed","x0":0})"), ErrorCode::InvalidPlan);
  EXPECT_EQ(code(R"({"scheme":"Signed","x0":0,"t":1,"dt":-1,"n_paths":5})"), ErrorCode::InvalidPlan);
  EXPECT_EQ(code(R"({"scheme":"Reflected","x0":-1,"t":1,"dt":0.01,"n_paths":5})"), ErrorCode::InvalidPlan);
}

TEST(ReportJson, NonFiniteBecomesNull) {
  const CheckReport r = make_report("n", NAN, 1.0, 0.1, "d");
  const json j = to_json(r);
  EXPECT_TRUE(j.at("computed").is_null());
  EXPECT_EQ(j.at("passed"), false);
  EXPECT_EQ(to_json_line(r).find('\n'), std::string::npos);
}
