#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curvemass/config.hpp"

namespace curvemass {

/// Output of one subcommand. `errors` lists {element, message} records for
/// every operation that failed; the other entries still complete.
struct CommandReport {
  nlohmann::json doc;
  /// CSV rendering; for `zeta` the polynomial data lives in `sidecar`.
  std::string csv;
  nlohmann::json sidecar;
  std::vector<std::pair<std::string, std::string>> errors;

  bool ok() const { return errors.empty(); }
};

CommandReport cmd_zeta(const RunConfig& cfg);
CommandReport cmd_mass(const RunConfig& cfg);
CommandReport cmd_asymptote(const RunConfig& cfg);

/// Largest rank for which semistable masses are cross-checked with the
/// Harder-Narasimhan recursion in `mass` reports.
inline constexpr unsigned kHnRankLimit = 6;

/// Shortest decimal form that reads back to the same double ("%.17g" style).
std::string format_double(double x);

}  // namespace curvemass
