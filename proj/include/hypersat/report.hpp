#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hypersat {

inline constexpr int kReportSchema = 1;

// Stated in every report.
inline constexpr std::string_view kConstantsNote =
    "desk-scale run: asymptotic constants are not checked, only exact postconditions, "
    "closed-form means and the sign of the fitted constant";

struct ReportParameters {
  std::string family;  // gnp, steiner, empty, or an audit suite
  std::size_t n = 0;
  int r = 2;
  int k = 2;
  std::string grid_kind;      // "p", "budget" or "" when there is no grid
  std::vector<double> grid;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t work_cap = 0;

  friend bool operator==(const ReportParameters&, const ReportParameters&) = default;
};

// One row per trial.
struct TrialRecord {
  std::size_t point = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::uint64_t copies = 0;
  double ratio = 0.0;        // copies / (edges/n)^(2k), 0 when edges = 0
  std::string status = "ok"; // ok, work_cap, infeasible, fail

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct PointSummary {
  double value = 0.0;
  std::size_t completed = 0;  // trials with status ok
  double mean_edges = 0.0;
  double mean = 0.0;
  double variance = 0.0;      // sample variance, 0 for a single trial
  std::optional<double> reference;
  double ratio = 0.0;         // mean / (mean_edges/n)^(2k)
  bool below_threshold = false;  // mean_edges < n
  std::size_t capped = 0;

  friend bool operator==(const PointSummary&, const PointSummary&) = default;
};

struct AuditOutcome {
  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  // First failing instance, enough to replay it.
  std::optional<nlohmann::json> witness;

  friend bool operator==(const AuditOutcome&, const AuditOutcome&) = default;
};

struct ExperimentReport {
  int schema = kReportSchema;
  std::string kind;  // sweep, expectation, audit
  std::string note{kConstantsNote};
  ReportParameters parameters;
  std::vector<TrialRecord> trials;
  std::vector<PointSummary> points;

  // sweep
  std::optional<double> c_hat;  // min ratio over points above threshold
  bool c_hat_positive = false;
  bool monotone = false;        // mean counts non-decreasing along the grid
  std::size_t spot_checked = 0;
  std::size_t spot_failed = 0;

  // expectation
  std::optional<double> reference;
  std::optional<double> z_score;

  std::optional<AuditOutcome> audit;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

nlohmann::json to_json(const ExperimentReport& report);
// Throws ParseError on a missing field or a schema other than 1.
ExperimentReport report_from_json(const nlohmann::json& j);

// Header plus one line per trial.
std::string trials_to_csv(const ExperimentReport& report);
std::vector<TrialRecord> trials_from_csv(std::string_view csv);

}  // namespace hypersat
