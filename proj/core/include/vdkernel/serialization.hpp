#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vdkernel/geometry.hpp"
#include "vdkernel/simulate.hpp"
#include "vdkernel/verify.hpp"

namespace vdkernel {

// Points:  {"component":"O"}, {"component":"E2","coords":[u]},
//          {"component":"E1","coords":[x,y,z]}.
// Plans:   {"scheme":"Signed"|"Reflected"|"FullSkewProduct",
//           "x0": <point> | <number>, "t": .., "dt": .., "n_paths": ..,
//           "seed": .., "record": "EndpointOnly"|"FullPath"|"FirstPassage",
//           "gamma": .. (optional, read by the CLI), "clock_cap": ..,
//           "threads": ..}
// Malformed documents raise Error(InvalidInput) or Error(InvalidPlan).

nlohmann::json to_json(const EPoint& p);
EPoint epoint_from_json(const nlohmann::json& j);
EPoint parse_epoint(const std::string& text);

nlohmann::json to_json(const SimPlan& plan);
SimPlan simplan_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& r);

/// One JSON object per line, no trailing newline.
std::string to_json_line(const CheckReport& r);

}  // namespace vdkernel
