#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvemass/asymptotics.hpp"
#include "curvemass/curves.hpp"
#include "curvemass/groups.hpp"

namespace curvemass {

inline constexpr int kConfigSchema = 1;

struct CurveEntry {
  std::string name;
  CurveModel model;
  /// Largest m reported in point-count tables; 0 means max(2g, 1).
  unsigned m_max = 0;
};

enum class OutputFormat { Json, Csv };

OutputFormat parse_output_format(const std::string& text);

struct RunConfig {
  std::vector<CurveEntry> curves;
  std::vector<GroupSpec> groups;
  std::optional<TVData> tv;
  /// Curve names forming a family for convergence reports, sorted by genus.
  std::vector<std::string> family;
  unsigned trunc = 10;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  /// Stalk-dimension bound used by the general rhs envelope check.
  unsigned d_bound = 1;
  OutputFormat format = OutputFormat::Json;
  std::string out_path;

  const CurveEntry& curve(const std::string& name) const;
  CountOptions count_options() const;
};

/// Parses a config document. Throws ConfigError naming the offending element.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Checks trunc >= 1, budget >= q for every curve, and that family names resolve.
void validate(const RunConfig& cfg);

/// {"family": "GL", "n": 2} or {"name", "dim", "degrees", "tamagawa"}.
GroupSpec parse_group(const nlohmann::json& j, const std::string& where);
/// {"q": 4, "beta": {"1": "1"}, "groups": [{"deg", "gamma", "L"}]}.
TVData parse_tv(const nlohmann::json& j, const std::string& where);
CurveEntry parse_curve(const nlohmann::json& j, const std::string& where);

}  // namespace curvemass
