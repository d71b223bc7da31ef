#pragma once

// Batch verification: a scenario names a target (an algebra, an index
// category, a signature pair, a family, a presheaf or a list of type
// expressions) and a list of checks to run against it. Reports are
// deterministic apart from the duration field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catsem/errors.hpp"
#include "catsem/mlalg.hpp"

namespace catsem {

/// Malformed scenario file, unknown check kind or unresolvable target.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct Scenario {
  std::string name;
  nlohmann::json target;
  std::vector<nlohmann::json> checks;
  std::uint64_t seed = 0;
};

/// Validates the document structurally (see scenarios/scenario.schema.json).
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

struct CheckResult {
  std::string name;
  std::string kind;
  CheckStatus status = CheckStatus::pass;
  std::size_t fibers_checked = 0;
  std::size_t elements_checked = 0;
  std::optional<std::string> witness;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double duration_ms = 0.0;

  CheckStatus status() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  /// Replaces the bound of a nat target.
  std::optional<std::size_t> bound;
};

/// Runs the checks in declaration order. Throws ScenarioError when the
/// target cannot be built or a check is malformed.
Report run_scenario(const Scenario& s, const RunOptions& opts = {});
Report run_scenario_file(const std::string& path, const RunOptions& opts = {});

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);
/// `format` is "text" or "json"; anything else throws ScenarioError.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace catsem
