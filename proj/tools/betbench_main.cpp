// betbench: generate value/bet question datasets and evaluate scorers on them.
//
//   betbench generate --kind bet --modality coin --split test --out coin_test.jsonl
//   betbench evaluate --dataset coin_test.jsonl --scorer builtin:oracle --out report.jsonl
//   betbench evaluate --dataset coin_test.jsonl --method threshold --dev coin_dev.jsonl ...
//   betbench bca --dataset coin_test.jsonl --scorer exec:"python3 serve.py" --out bca.jsonl
//   betbench fixtures

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "betbench/commands.hpp"
#include "betbench/errors.hpp"

namespace cli = betbench::cli;

namespace {

void add_scorer_flags(CLI::App* cmd, cli::ScorerConfig& config, std::string& normalization) {
  cmd->add_option("--scorer", config.scorer,
                  "builtin:random|oracle|inverse-oracle|constant[=K]|belief-table, or exec:CMD")
      ->capture_default_str();
  cmd->add_option("--seed", config.seed, "Seed for builtin:random")->capture_default_str();
  cmd->add_option("--belief-table", config.belief_table, "Belief JSONL for builtin:belief-table");
  cmd->add_option("--normalization", normalization,
                  "Declared output of an exec scorer: raw-logit | already-normalized")
      ->capture_default_str();
  cmd->add_option("--workers", config.workers, "Parallel connections to an exec scorer")
      ->capture_default_str();
  cmd->add_option("--timeout-ms", config.timeout_ms, "Per-request exec scorer timeout")
      ->capture_default_str();
}

std::vector<betbench::GtKind> parse_gts(const std::vector<std::string>& labels) {
  std::vector<betbench::GtKind> out;
  for (const auto& l : labels) out.push_back(betbench::parse_gt_kind(l));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value-question and bet-question benchmark generator and evaluation harness"};
  app.require_subcommand(1);

  // generate
  cli::GenerateConfig gen;
  std::string gen_split = "test";
  auto* generate = app.add_subcommand("generate", "Instantiate a dataset from templates");
  generate->add_option("--catalog", gen.catalog, "'default' or a catalog JSON file")
      ->capture_default_str();
  generate->add_option("--kind", gen.kind, "value | bet")->capture_default_str();
  generate->add_option("--template", gen.value_template,
                       "boolean-expensive | boolean-valuable | choice-expensive | choice-valuable");
  generate->add_option("--modality", gen.modality, "coin | dice | card");
  generate->add_option("--split", gen_split, "train | dev | test")->capture_default_str();
  generate->add_flag("--shuffle-choices", gen.shuffle_choices,
                     "Permute each instance's choices (recorded in the record)");
  generate->add_option("--seed", gen.seed, "Seed for --shuffle-choices")->capture_default_str();
  generate->add_option("--out", gen.out, "Output dataset JSONL")->required();

  // evaluate
  cli::EvaluateConfig eval;
  std::string eval_method = "standard";
  std::string eval_norm = "raw-logit";
  std::vector<std::string> eval_gts;
  auto* evaluate = app.add_subcommand("evaluate", "Score a dataset and report accuracy");
  evaluate->add_option("--dataset", eval.dataset, "Test dataset JSONL")->required();
  add_scorer_flags(evaluate, eval.scorer, eval_norm);
  evaluate->add_option("--method", eval_method, "standard | threshold")->capture_default_str();
  evaluate->add_option("--gt", eval_gts, "Ground-truth kinds (threshold method); default all");
  evaluate->add_option("--dev", eval.dev, "Dev dataset JSONL for threshold grid search");
  evaluate->add_option("--out", eval.out, "Report JSONL");
  evaluate->add_option("--scores-out", eval.scores_out, "Score JSONL");

  // bca
  cli::BcaConfig bca;
  std::string bca_norm = "raw-logit";
  std::string bca_template = "choice-valuable";
  std::string bca_force;
  auto* bca_cmd = app.add_subcommand("bca", "Belief conditioned accuracy on a bet dataset");
  bca_cmd->add_option("--dataset", bca.dataset, "Bet dataset JSONL")->required();
  bca_cmd->add_option("--catalog", bca.catalog, "Catalog for belief elicitation")
      ->capture_default_str();
  add_scorer_flags(bca_cmd, bca.scorer, bca_norm);
  bca_cmd->add_option("--template", bca_template,
                      "Value template for belief elicitation, or 'mode' for all four")
      ->capture_default_str();
  bca_cmd->add_option("--force-belief", bca_force,
                      "Skip elicitation: h-greater | l-greater | equal for every pair");
  bca_cmd->add_option("--out", bca.out, "Report JSONL");
  bca_cmd->add_option("--beliefs-out", bca.beliefs_out, "Write the belief table JSONL");

  // calibrate
  cli::CalibrateConfig cal;
  std::string cal_norm = "raw-logit";
  std::vector<std::string> cal_gts;
  auto* calibrate = app.add_subcommand("calibrate", "Grid-search the threshold on a dev set");
  calibrate->add_option("--dev", cal.dev, "Dev dataset JSONL")->required();
  add_scorer_flags(calibrate, cal.scorer, cal_norm);
  calibrate->add_option("--gt", cal_gts, "Ground-truth kinds; default all");

  // baselines
  cli::BaselinesConfig base;
  auto* baselines = app.add_subcommand("baselines", "Expected random accuracy by enumeration");
  baselines->add_option("--dataset", base.dataset, "Dataset JSONL; default: built-in test sets");

  // fixtures
  cli::FixturesConfig fix;
  std::string fix_se = "bessel";
  auto* fixtures = app.add_subcommand("fixtures", "Run the p-value and baseline fixture suite");
  fixtures->add_option("--se", fix_se, "Standard-error form: bessel | sample | null")
      ->capture_default_str();

  // report
  std::vector<std::filesystem::path> report_files;
  auto* report = app.add_subcommand("report", "Render report JSONL files as tables");
  report->add_option("reports", report_files, "Report JSONL files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      gen.split = betbench::parse_split(gen_split);
      return cli::cmd_generate(gen, std::cout);
    }
    if (evaluate->parsed()) {
      eval.method = betbench::parse_method(eval_method);
      eval.scorer.normalization = betbench::parse_normalization_mode(eval_norm);
      eval.gt_kinds = parse_gts(eval_gts);
      return cli::cmd_evaluate(eval, std::cout);
    }
    if (bca_cmd->parsed()) {
      bca.scorer.normalization = betbench::parse_normalization_mode(bca_norm);
      if (bca_template == "mode") {
        bca.elicitation.single.reset();
      } else {
        bca.elicitation.single = betbench::parse_value_template(bca_template);
      }
      if (!bca_force.empty()) bca.force_belief = betbench::parse_belief(bca_force);
      return cli::cmd_bca(bca, std::cout);
    }
    if (calibrate->parsed()) {
      cal.scorer.normalization = betbench::parse_normalization_mode(cal_norm);
      cal.gt_kinds = parse_gts(cal_gts);
      return cli::cmd_calibrate(cal, std::cout);
    }
    if (baselines->parsed()) return cli::cmd_baselines(base, std::cout);
    if (fixtures->parsed()) {
      static const std::map<std::string, betbench::StdErrForm> forms = {
          {"bessel", betbench::StdErrForm::SampleBessel},
          {"sample", betbench::StdErrForm::Sample},
          {"null", betbench::StdErrForm::Null}};
      auto it = forms.find(fix_se);
      if (it == forms.end()) throw betbench::ParseError("unknown --se form '" + fix_se + "'");
      fix.stderr_form = it->second;
      return cli::cmd_fixtures(fix, std::cout);
    }
    if (report->parsed()) return cli::cmd_report(report_files, std::cout);
  } catch (const betbench::Error& e) {
    std::cerr << "betbench: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
