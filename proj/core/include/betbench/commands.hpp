#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betbench/beliefs.hpp"
#include "betbench/metrics.hpp"
#include "betbench/scoring.hpp"
#include "betbench/stats.hpp"

namespace betbench::cli {

struct ScorerConfig {
  std::string scorer = "builtin:oracle";
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> belief_table;
  NormalizationMode normalization = NormalizationMode::RawLogit;
  int workers = 1;
  int timeout_ms = 60'000;
};

struct GenerateConfig {
  std::string catalog = "default";  // "default" or a path
  std::string kind = "bet";         // "value" | "bet"
  std::optional<std::string> value_template;
  std::optional<std::string> modality;
  Split split = Split::Test;
  bool shuffle_choices = false;
  std::uint64_t seed = 0;
  std::filesystem::path out;
};

struct EvaluateConfig {
  std::filesystem::path dataset;
  ScorerConfig scorer;
  Method method = Method::Standard;
  std::vector<GtKind> gt_kinds;  // empty: every kind for the dataset's family
  std::optional<std::filesystem::path> dev;
  std::filesystem::path out;
  std::optional<std::filesystem::path> scores_out;
};

struct BcaConfig {
  std::filesystem::path dataset;
  std::string catalog = "default";
  ScorerConfig scorer;
  BeliefElicitation elicitation;
  std::optional<Belief> force_belief;
  std::filesystem::path out;
  std::optional<std::filesystem::path> beliefs_out;
};

struct CalibrateConfig {
  std::filesystem::path dev;
  ScorerConfig scorer;
  std::vector<GtKind> gt_kinds;
};

struct BaselinesConfig {
  std::optional<std::filesystem::path> dataset;  // nullopt: default test split, every family
};

struct FixturesConfig {
  StdErrForm stderr_form = StdErrForm::SampleBessel;
};

struct PValueFixture {
  int k;
  int n;
  Rational p0;
  std::string expected;
};

/// Appendix p-value entries the z-test must reproduce after formatting.
const std::vector<PValueFixture>& p_value_fixtures();

struct FixtureOutcome {
  int passed = 0;
  int failed = 0;
};

Catalog resolve_catalog(const std::string& catalog);

// Each command writes its artifacts, prints a human-readable summary to `out`,
// and returns a process exit code. Errors propagate as betbench::Error.
int cmd_generate(const GenerateConfig& config, std::ostream& out);
int cmd_evaluate(const EvaluateConfig& config, std::ostream& out);
int cmd_bca(const BcaConfig& config, std::ostream& out);
int cmd_calibrate(const CalibrateConfig& config, std::ostream& out);
int cmd_baselines(const BaselinesConfig& config, std::ostream& out);
FixtureOutcome run_fixtures(const FixturesConfig& config, std::ostream& out);
int cmd_fixtures(const FixturesConfig& config, std::ostream& out);
int cmd_report(const std::vector<std::filesystem::path>& reports, std::ostream& out);

/// Library-level pieces of evaluate, reusable without files.
std::vector<EvalSummary> evaluate_records(const std::vector<DatasetRecord>& test,
                                          const std::vector<DatasetRecord>* dev, Scorer& scorer,
                                          Method method, std::vector<GtKind> gt_kinds,
                                          std::vector<ScoreRecord>* scores_out = nullptr);

}  // namespace betbench::cli
