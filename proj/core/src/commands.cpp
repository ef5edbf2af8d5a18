#include "betbench/commands.hpp"

#include <ostream>

#include "betbench/catalog.hpp"
#include "betbench/errors.hpp"
#include "betbench/predict.hpp"
#include "betbench/records.hpp"
#include "betbench/report.hpp"

namespace betbench::cli {

namespace {

struct ScorerHandle {
  BeliefTable table;
  std::unique_ptr<Scorer> scorer;
};

ScorerHandle open_scorer(const ScorerConfig& config) {
  ScorerHandle handle;
  const ScorerSpec spec = parse_scorer_spec(config.scorer);
  if (config.belief_table) handle.table = read_beliefs(*config.belief_table);
  ScorerOptions options;
  options.seed = config.seed;
  options.belief_table = config.belief_table ? &handle.table : nullptr;
  options.external_mode = config.normalization;
  options.workers = config.workers;
  options.timeout_ms = config.timeout_ms;
  handle.scorer = make_scorer(spec, options);
  return handle;
}

std::vector<GtKind> kinds_for(QuestionFamily family, std::vector<GtKind> requested) {
  if (family != QuestionFamily::Value && family != QuestionFamily::Bet) {
    throw ValidationError("dataset must hold only value questions or only bet questions");
  }
  const bool value = family == QuestionFamily::Value;
  if (requested.empty()) {
    const auto& all = value ? kValueGtKinds : kBetGtKinds;
    return {all.begin(), all.end()};
  }
  for (GtKind k : requested) {
    if (is_value_gt(k) != value) {
      throw ValidationError("ground truth '" + std::string(to_string(k)) + "' does not apply to " +
                            (value ? "value" : "bet") + " questions");
    }
  }
  return requested;
}

}  // namespace

Catalog resolve_catalog(const std::string& catalog) {
  if (catalog.empty() || catalog == "default") return default_catalog();
  return load_catalog(read_text(catalog));
}

int cmd_generate(const GenerateConfig& config, std::ostream& out) {
  const Catalog catalog = resolve_catalog(config.catalog);
  DatasetSpec spec;
  if (config.kind == "value") {
    if (!config.value_template) throw ValidationError("value datasets need --template");
    spec.family = parse_value_template(*config.value_template);
  } else if (config.kind == "bet") {
    if (!config.modality) throw ValidationError("bet datasets need --modality");
    spec.family = parse_modality(*config.modality);
  } else {
    throw ParseError("--kind must be 'value' or 'bet', got '" + config.kind + "'");
  }
  if (config.out.empty()) throw ValidationError("generate needs --out");

  GenerateOptions options{config.shuffle_choices, config.seed};
  const auto records = annotate_all(generate(catalog, config.split, spec, options));
  write_dataset(config.out, records);
  out << "wrote " << records.size() << " " << dataset_label(records) << " records to "
      << config.out.string() << "\n";
  return 0;
}

std::vector<EvalSummary> evaluate_records(const std::vector<DatasetRecord>& test,
                                          const std::vector<DatasetRecord>* dev, Scorer& scorer,
                                          Method method, std::vector<GtKind> gt_kinds,
                                          std::vector<ScoreRecord>* scores_out) {
  if (test.empty()) throw ValidationError("evaluation dataset is empty");
  const QuestionFamily family = family_of(test);
  const std::string label = dataset_label(test);

  auto scores = scorer.score_all(test);
  std::vector<EvalSummary> rows;

  if (method == Method::Standard) {
    (void)kinds_for(family, {});
    EvalSummary row = accuracy_standard(predict_standard(scores), test);
    row.scorer = scorer.name();
    row.dataset = label;
    rows.push_back(row);
  } else {
    if (dev == nullptr || dev->empty()) {
      throw ValidationError("the threshold method needs a dev dataset (--dev)");
    }
    if (family_of(*dev) != family) {
      throw ValidationError("dev dataset must hold the same question family as the test set");
    }
    const auto dev_scores = scorer.score_all(*dev);
    const std::string dev_label = dataset_label(*dev);
    for (GtKind kind : kinds_for(family, std::move(gt_kinds))) {
      const auto examples = calibration_set(*dev, dev_scores, kind);
      const GridSearchResult grid = grid_search(examples);
      const double theta = grid.threshold.value();
      EvalSummary row = accuracy_threshold(predict_threshold(scores, theta), test, kind);
      row.scorer = scorer.name();
      row.dataset = label;
      row.threshold = theta;
      row.dev_dataset = dev_label;
      rows.push_back(row);
    }
  }
  if (scores_out != nullptr) *scores_out = std::move(scores);
  return rows;
}

int cmd_evaluate(const EvaluateConfig& config, std::ostream& out) {
  const auto test = read_dataset(config.dataset);
  std::vector<DatasetRecord> dev;
  if (config.dev) dev = read_dataset(*config.dev);
  auto handle = open_scorer(config.scorer);

  std::vector<ScoreRecord> scores;
  const auto rows = evaluate_records(test, config.dev ? &dev : nullptr, *handle.scorer,
                                     config.method, config.gt_kinds, &scores);
  if (!config.out.empty()) write_report(config.out, rows);
  if (config.scores_out) write_scores(*config.scores_out, scores);
  out << render_rows(rows);
  return 0;
}

int cmd_bca(const BcaConfig& config, std::ostream& out) {
  const auto test = read_dataset(config.dataset);
  if (family_of(test) != QuestionFamily::Bet) {
    throw ValidationError("bca needs a dataset of bet questions");
  }
  const Split split = test.front().instance.split;
  for (const auto& r : test) {
    if (r.instance.split != split) throw ValidationError("bca dataset mixes splits");
  }
  auto handle = open_scorer(config.scorer);

  BeliefTable beliefs;
  if (config.force_belief) {
    for (const auto& r : test) {
      beliefs.set(r.instance.high_item(), r.instance.low_item(), *config.force_belief);
    }
  } else {
    const Catalog catalog = resolve_catalog(config.catalog);
    beliefs = elicit_beliefs(*handle.scorer, catalog, split, config.elicitation);
  }

  const auto scores = handle.scorer->score_all(test);
  const auto predictions = predict_standard(scores);
  std::vector<EvalSummary> rows{accuracy_standard(predictions, test),
                                bca(predictions, test, beliefs)};
  for (auto& row : rows) {
    row.scorer = handle.scorer->name();
    row.dataset = dataset_label(test);
  }
  if (!config.out.empty()) write_report(config.out, rows);
  if (config.beliefs_out) write_beliefs(*config.beliefs_out, beliefs);
  out << render_rows(rows);
  return 0;
}

int cmd_calibrate(const CalibrateConfig& config, std::ostream& out) {
  const auto dev = read_dataset(config.dev);
  auto handle = open_scorer(config.scorer);
  const auto scores = handle.scorer->score_all(dev);
  for (GtKind kind : kinds_for(family_of(dev), config.gt_kinds)) {
    const auto result = grid_search(calibration_set(dev, scores, kind));
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "{\"gt\":\"%s\",\"threshold\":%.4f,\"dev_correct\":%d,\"dev_n\":%d,"
                  "\"maximizers\":%zu}",
                  std::string(to_string(kind)).c_str(), result.threshold.value(),
                  result.best_correct, result.examples, result.maximizers.size());
    out << buf << "\n";
  }
  return 0;
}

int cmd_baselines(const BaselinesConfig& config, std::ostream& out) {
  auto print = [&](const std::string& label, const std::vector<DatasetRecord>& records) {
    out << label << "\n";
    out << "  standard: " << to_string(random_baseline(std::nullopt, records)) << "\n";
    const bool value = family_of(records) == QuestionFamily::Value;
    for (GtKind k : value ? kValueGtKinds : kBetGtKinds) {
      out << "  " << to_string(k) << ": " << to_string(random_baseline(k, records)) << "\n";
    }
  };
  if (config.dataset) {
    const auto records = read_dataset(*config.dataset);
    print(dataset_label(records), records);
    return 0;
  }
  for (ValueTemplate t : kAllValueTemplates) {
    const auto records =
        annotate_all(generate(default_catalog(), Split::Test, DatasetSpec{t}));
    print(dataset_label(records), records);
  }
  for (BetModality m : kAllModalities) {
    const auto records =
        annotate_all(generate(default_catalog(), Split::Test, DatasetSpec{m}));
    print(dataset_label(records), records);
  }
  return 0;
}

const std::vector<PValueFixture>& p_value_fixtures() {
  static const std::vector<PValueFixture> fixtures = {
      {17, 25, Rational(1, 3), "<.001"}, {9, 25, Rational(1, 3), ".392"},
      {14, 25, Rational(1, 3), ".013"},  {13, 25, Rational(1, 3), ".033"},
      {6, 25, Rational(1, 3), ".857"},   {12, 25, Rational(1, 3), ".075"},
      {11, 25, Rational(1, 3), ".146"},  {10, 25, Rational(1, 3), ".252"},
      {43, 100, Rational(1, 3), ".026"}, {42, 100, Rational(1, 3), ".040"},
      {35, 100, Rational(1, 3), ".364"}, {47, 100, Rational(1, 3), ".003"},
      {29, 100, Rational(1, 3), ".829"}, {27, 100, Rational(1, 3), ".922"},
      {49, 100, Rational(1, 3), "<.001"},
  };
  return fixtures;
}

FixtureOutcome run_fixtures(const FixturesConfig& config, std::ostream& out) {
  FixtureOutcome outcome;
  auto report = [&](bool ok, const std::string& line) {
    (ok ? outcome.passed : outcome.failed) += 1;
    out << (ok ? "PASS " : "FAIL ") << line << "\n";
  };

  for (const auto& f : p_value_fixtures()) {
    const TestResult t = ztest(f.k, f.n, f.p0, config.stderr_form);
    const std::string shown = format_p(t.p);
    char buf[160];
    std::snprintf(buf, sizeof buf, "p-value k=%d n=%d p0=%s: got %s (p=%.5f), expected %s", f.k,
                  f.n, to_string(f.p0).c_str(), shown.c_str(), t.p, f.expected.c_str());
    report(shown == f.expected, buf);
  }

  struct BaselineFixture {
    std::optional<GtKind> kind;
    Rational expected;
  };
  auto check_family = [&](const std::vector<DatasetRecord>& records,
                          const std::vector<BaselineFixture>& expected) {
    for (const auto& e : expected) {
      const Rational got = random_baseline(e.kind, records);
      const std::string name = e.kind ? std::string(to_string(*e.kind)) : "standard";
      report(got == e.expected, "baseline " + dataset_label(records) + " " + name + ": got " +
                                    to_string(got) + ", expected " + to_string(e.expected));
    }
  };
  for (ValueTemplate t : kAllValueTemplates) {
    check_family(annotate_all(generate(default_catalog(), Split::Test, DatasetSpec{t})),
                 {{std::nullopt, Rational(1, 3)},
                  {GtKind::Normal, Rational(1, 8)},
                  {GtKind::WeakNormal, Rational(2, 8)},
                  {GtKind::Weak, Rational(5, 8)}});
  }
  for (BetModality m : kAllModalities) {
    check_family(annotate_all(generate(default_catalog(), Split::Test, DatasetSpec{m})),
                 {{std::nullopt, Rational(1, 3)},
                  {GtKind::Strict, Rational(1, 8)},
                  {GtKind::PositiveGain, Rational(2, 8)},
                  {GtKind::NonNegativeGain, Rational(2, 8)}});
  }
  out << outcome.passed << " passed, " << outcome.failed << " failed\n";
  return outcome;
}

int cmd_fixtures(const FixturesConfig& config, std::ostream& out) {
  return run_fixtures(config, out).failed == 0 ? 0 : 1;
}

int cmd_report(const std::vector<std::filesystem::path>& reports, std::ostream& out) {
  std::vector<EvalSummary> rows;
  for (const auto& path : reports) {
    auto part = read_report(path);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  out << render_rows(rows) << "\n" << render_pivot(rows);
  return 0;
}

}  // namespace betbench::cli
