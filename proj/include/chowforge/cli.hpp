#pragma once

// Scenario runner behind the command-line tool: configuration, report
// assembly, text and JSON rendering, golden-file comparison.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/scenarios.hpp"
#include "json.hpp"

namespace chowforge {

inline constexpr const char* kReportSchema = "chowforge.report/1";

enum class ScenarioKind {
  kIg0,
  kIg1,
  kWn,
  kA1Vanishing,
  kR2,
  kTestMatrix,
  kGeneralPosition,
  kCurveConditions,
  kAll,
};

std::string scenario_name(ScenarioKind s);
/// Throws Config for unknown names.
ScenarioKind parse_scenario(const std::string& name);
/// Every concrete scenario, in report order.
const std::vector<ScenarioKind>& all_scenarios();

enum class Format { kText, kJson };

struct RunConfig {
  ScenarioKind scenario = ScenarioKind::kAll;
  Genus genus = Genus::symbolic();
  std::optional<int> n;  // per-scenario default when absent
  std::uint64_t seed = 1;
  int trials = 20;
  std::optional<std::uint64_t> prime;  // default_prime() when absent
  Format format = Format::kText;
  std::optional<std::filesystem::path> golden_dir;
  bool write_golden = false;
};

/// Parses "symbolic" or an integer >= 2; throws BadGenus or Config.
Genus parse_genus(const std::string& text);

/// Throws Config on invalid combinations (even prime, trials < 1, ...).
void validate(const RunConfig& cfg);

struct ScenarioReport {
  std::string scenario;
  nlohmann::ordered_json output;
  std::vector<Check> checks;
  bool all_pass() const;
};

struct Report {
  RunConfig config;
  std::vector<ScenarioReport> scenarios;
  bool all_pass() const;
};

ScenarioReport run_scenario(ScenarioKind s, const RunConfig& cfg);
/// `all` fans out over threads; the scenario order in the report is fixed.
Report run(const RunConfig& cfg);

nlohmann::ordered_json config_to_json(const RunConfig& cfg);
nlohmann::ordered_json report_to_json(const Report& r);
/// Canonical form used for goldens: two-space indent, trailing newline.
std::string canonical_json(const Report& r);
std::string report_to_text(const Report& r);

std::string golden_filename(const RunConfig& cfg);

struct GoldenDiff {
  std::vector<std::string> lines;
  bool empty() const { return lines.empty(); }
};

/// Byte comparison against the stored canonical JSON; on mismatch, one line
/// per differing field, naming the claim_id when the field is in a check.
/// Throws MissingGolden.
GoldenDiff compare_golden(const Report& r, const std::filesystem::path& dir);
GoldenDiff diff_reports(const nlohmann::ordered_json& golden, const nlohmann::ordered_json& actual);
void write_golden(const Report& r, const std::filesystem::path& dir);

/// Full command-line entry point; returns the process exit status
/// (0 all checks pass, 1 failed check or golden diff, 2 config error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chowforge
