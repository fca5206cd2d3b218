#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vdkernel/quadrature.hpp"

namespace vdkernel::cli {

enum class OutputFormat { csv, json };

struct CliConfig {
  double gamma = 1.0;
  QuadConfig quad{};
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::string> out_path;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one subcommand (eval, table, verify, simulate). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed 17-significant-digit scientific notation used in CSV output.
std::string csv_number(double v);

}  // namespace vdkernel::cli
