// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "betbench/commands.hpp"
#include "betbench/errors.hpp"
#include "betbench/metrics.hpp"
#include "betbench/predict.hpp"
#include "betbench/records.hpp"

using namespace betbench;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<DatasetRecord> dataset(std::variant<ValueTemplate, BetModality> family, Split split) {
  return annotate_all(generate(default_catalog(), split, DatasetSpec{family}));
}

std::string family_name(const std::variant<ValueTemplate, BetModality>& f) {
  return std::holds_alternative<ValueTemplate>(f)
             ? "value-" + std::string(to_string(std::get<ValueTemplate>(f)))
             : "bet-" + std::string(to_string(std::get<BetModality>(f)));
}

std::vector<std::variant<ValueTemplate, BetModality>> all_families() {
  std::vector<std::variant<ValueTemplate, BetModality>> out;
  for (auto t : kAllValueTemplates) out.emplace_back(t);
  for (auto m : kAllModalities) out.emplace_back(m);
  return out;
}

Outcome dataset_counts() {
  Outcome o;
  int checked = 0;
  for (const auto& f : all_families()) {
    const bool bet = std::holds_alternative<BetModality>(f);
    for (Split split : kAllSplits) {
      const std::size_t expected = (split == Split::Train ? 210u : 25u) * (bet ? 4u : 1u);
      const std::size_t got = dataset(f, split).size();
      ++checked;
      if (got != expected) {
        o.ok = false;
        o.detail += fmt("%s-%s: %zu != %zu; ", family_name(f).c_str(),
                        std::string(to_string(split)).c_str(), got, expected);
      }
    }
  }
  if (o.ok) o.detail = fmt("%d datasets: bet 100/100/840, value 25/25/210 (test/dev/train)", checked);
  return o;
}

Outcome gain_tables() {
  const Rational h(1, 2), q(1, 4);
  struct Row {
    const char* label;
    SubsetGain got;
    GainExpr expected;
  };
  Outcome o;
  int matched = 0;
  for (int w : {0, 1}) {
    for (Tier tier : kAllTiers) {
      const BetVariant v{w, tier};
      const bool high = tier == Tier::High;
      const PredictionSubset win = PredictionSubset::of({w});
      const PredictionSubset lose = PredictionSubset::of({1 - w});
      const Row rows[] = {
          {"bet win", subset_gain(win, v),
           high ? GainExpr{h, 0, -h} : GainExpr{0, h, -h}},
          {"bet lose", subset_gain(lose, v),
           high ? GainExpr{0, -h, -h} : GainExpr{-h, 0, -h}},
          {"bet both", subset_gain(PredictionSubset::of({0, 1}), v),
           high ? GainExpr{q, -q, -h} : GainExpr{-q, q, -h}},
          {"no bet", subset_gain(PredictionSubset::of({kNoBet}), v), GainExpr::zero()},
      };
      for (const auto& r : rows) {
        const auto* e = std::get_if<GainExpr>(&r.got);
        if (e && *e == r.expected) {
          ++matched;
        } else {
          o.ok = false;
          o.detail += fmt("w%d%s %s: got %s expected %s; ", w, high ? "H" : "L", r.label,
                          e ? to_string(*e).c_str() : "non-gain", to_string(r.expected).c_str());
        }
      }
    }
  }
  if (o.ok) o.detail = fmt("%d/16 expressions exact (4 per variant, both tiers, both outcomes)", matched);
  return o;
}

Outcome baselines() {
  Outcome o;
  int matched = 0;
  auto expect = [&](const std::vector<DatasetRecord>& records, std::optional<GtKind> kind,
                    Rational want) {
    const Rational got = random_baseline(kind, records);
    if (got == want) {
      ++matched;
      return;
    }
    o.ok = false;
    o.detail += fmt("%s %s: %s != %s; ", dataset_label(records).c_str(),
                    kind ? std::string(to_string(*kind)).c_str() : "standard",
                    to_string(got).c_str(), to_string(want).c_str());
  };
  for (auto t : kAllValueTemplates) {
    for (Split split : kAllSplits) {
      const auto r = dataset(t, split);
      expect(r, std::nullopt, Rational(1, 3));
      expect(r, GtKind::Normal, Rational(1, 8));
      expect(r, GtKind::WeakNormal, Rational(2, 8));
      expect(r, GtKind::Weak, Rational(5, 8));
    }
  }
  for (auto m : kAllModalities) {
    for (Split split : kAllSplits) {
      const auto r = dataset(m, split);
      expect(r, std::nullopt, Rational(1, 3));
      expect(r, GtKind::Strict, Rational(1, 8));
      expect(r, GtKind::PositiveGain, Rational(2, 8));
      expect(r, GtKind::NonNegativeGain, Rational(2, 8));
    }
  }
  if (o.ok) o.detail = fmt("%d exact rational matches", matched);
  return o;
}

Outcome p_values() {
  Outcome o;
  int matched = 0;
  std::string misses;
  for (const auto& f : cli::p_value_fixtures()) {
    const double p = ztest(f.k, f.n, f.p0).p;
    const std::string shown = format_p(p);
    if (shown == f.expected) {
      ++matched;
    } else {
      o.ok = false;
      misses += fmt(" (%d,%d) %s vs %s [p=%.5f];", f.k, f.n, shown.c_str(), f.expected.c_str(), p);
    }
  }
  o.detail = fmt("%d/%zu displayed strings equal", matched, cli::p_value_fixtures().size());
  if (!o.ok) o.detail += ";" + misses;
  return o;
}

Outcome oracle_perfect() {
  Outcome o;
  OracleScorer oracle;
  int datasets = 0;
  for (const auto& f : all_families()) {
    const auto dev = dataset(f, Split::Dev);
    const bool bet = std::holds_alternative<BetModality>(f);
    for (Split split : kAllSplits) {
      const auto records = dataset(f, split);
      const auto std_rows = cli::evaluate_records(records, nullptr, oracle, Method::Standard, {});
      ++datasets;
      if (std_rows[0].accuracy_exact() != Rational(1)) {
        o.ok = false;
        o.detail += fmt("%s standard %d/%d; ", dataset_label(records).c_str(),
                        std_rows[0].n_correct, std_rows[0].n_effective());
      }
      const GtKind kind = bet ? GtKind::Strict : GtKind::Normal;
      const auto thr_rows =
          cli::evaluate_records(records, &dev, oracle, Method::Threshold, {kind});
      if (thr_rows[0].accuracy_exact() != Rational(1)) {
        o.ok = false;
        o.detail += fmt("%s %s %d/%d at theta %.3f; ", dataset_label(records).c_str(),
                        std::string(to_string(kind)).c_str(), thr_rows[0].n_correct,
                        thr_rows[0].n_effective(), thr_rows[0].threshold.value_or(-1));
      }
    }
  }
  if (o.ok) o.detail = fmt("%d datasets: standard 1.000, threshold strict/normal 1.000", datasets);
  return o;
}

Outcome monte_carlo() {
  constexpr int kSeeds = 1000;
  const auto records = dataset(BetModality::Coin, Split::Test);
  double sum_std = 0.0;
  double sum_strict = 0.0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    RandomScorer scorer(static_cast<std::uint64_t>(seed));
    const auto scores = scorer.score_all(records);
    sum_std += accuracy_standard(predict_standard(scores), records).accuracy();
    sum_strict +=
        accuracy_threshold(predict_threshold(scores, 0.5), records, GtKind::Strict).accuracy();
  }
  const double mean_std = sum_std / kSeeds;
  const double mean_strict = sum_strict / kSeeds;
  Outcome o;
  o.ok = std::abs(mean_std - 1.0 / 3.0) <= 0.02 && std::abs(mean_strict - 1.0 / 8.0) <= 0.02;
  o.detail = fmt("%d seeds: standard mean %.4f (1/3 +- 0.02), strict@0.5 mean %.4f (1/8 +- 0.02)",
                 kSeeds, mean_std, mean_strict);
  return o;
}

BeliefTable uniform_beliefs(Split split, Belief b) {
  BeliefTable t;
  for (const auto& p : pairs(default_catalog(), split)) t.set(p.high.name, p.low.name, b);
  return t;
}

Outcome bca_identities() {
  Outcome o;
  int checks = 0;
  auto fail = [&](const std::string& why) {
    o.ok = false;
    o.detail += why + "; ";
  };
  for (BetModality m : kAllModalities) {
    for (Split split : kAllSplits) {
      const auto records = dataset(m, split);
      const auto label = dataset_label(records);
      const BeliefTable h_greater = uniform_beliefs(split, Belief::HGreater);

      // 1. uniform h-greater beliefs: bca == acc for every scorer
      std::vector<std::unique_ptr<Scorer>> scorers;
      scorers.push_back(std::make_unique<OracleScorer>());
      scorers.push_back(std::make_unique<OracleScorer>(true));
      scorers.push_back(std::make_unique<ConstantScorer>(0.0));
      for (std::uint64_t s = 0; s < 5; ++s) scorers.push_back(std::make_unique<RandomScorer>(s));
      for (auto& sc : scorers) {
        const auto preds = predict_standard(sc->score_all(records));
        ++checks;
        if (bca(preds, records, h_greater).n_correct !=
            accuracy_standard(preds, records).n_correct) {
          fail(label + " " + sc->name() + ": bca != acc under h-greater beliefs");
        }
      }

      // 2. belief-table scorer: bca 1.000 against its own table, acc < 1 when roles swap
      BeliefTable mixed = h_greater;
      int i = 0;
      for (const auto& p : pairs(default_catalog(), split)) {
        if (i++ % 3 == 0) mixed.set(p.high.name, p.low.name, Belief::LGreater);
      }
      BeliefTableScorer believer(mixed);
      const auto bpreds = predict_standard(believer.score_all(records));
      const auto own = bca(bpreds, records, mixed);
      const auto acc = accuracy_standard(bpreds, records);
      ++checks;
      if (own.accuracy_exact() != Rational(1)) fail(label + ": belief-table bca below 1");
      ++checks;
      if (!(acc.accuracy_exact() < Rational(1))) fail(label + ": belief-table acc not below 1");

      // 3. oracle + all-equal beliefs: exactly one half
      OracleScorer oracle;
      const auto opreds = predict_standard(oracle.score_all(records));
      ++checks;
      if (bca(opreds, records, uniform_beliefs(split, Belief::Equal)).accuracy_exact() !=
          Rational(1, 2)) {
        fail(label + ": oracle bca under equal beliefs != 1/2");
      }
    }
  }
  if (o.ok) o.detail = fmt("%d identity checks over 9 bet datasets", checks);
  return o;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("betbench-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(root);
  std::vector<std::string> artifacts[2];
  std::ostringstream sink;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / std::to_string(run);
    fs::create_directories(dir);
    auto gen = [&](const std::string& name, std::string kind, std::string family, Split split,
                   bool shuffle) {
      cli::GenerateConfig g;
      g.kind = kind;
      if (kind == "bet") g.modality = family; else g.value_template = family;
      g.split = split;
      g.shuffle_choices = shuffle;
      g.seed = 2024;
      g.out = dir / name;
      cli::cmd_generate(g, sink);
      return g.out;
    };
    const auto test = gen("coin-test.jsonl", "bet", "coin", Split::Test, false);
    const auto dev = gen("dice-dev.jsonl", "bet", "dice", Split::Dev, false);
    const auto vtest = gen("cv-test.jsonl", "value", "choice-valuable", Split::Test, true);
    const auto vdev = gen("cv-dev.jsonl", "value", "choice-valuable", Split::Dev, true);

    cli::EvaluateConfig e;
    e.dataset = test;
    e.dev = dev;
    e.method = Method::Threshold;
    e.scorer.scorer = "builtin:random";
    e.scorer.seed = 9;
    e.out = dir / "bet-report.jsonl";
    e.scores_out = dir / "bet-scores.jsonl";
    cli::cmd_evaluate(e, sink);

    e.dataset = vtest;
    e.dev = vdev;
    e.out = dir / "value-report.jsonl";
    e.scores_out = dir / "value-scores.jsonl";
    cli::cmd_evaluate(e, sink);

    for (const char* f : {"coin-test.jsonl", "dice-dev.jsonl", "cv-test.jsonl", "cv-dev.jsonl",
                          "bet-report.jsonl", "bet-scores.jsonl", "value-report.jsonl",
                          "value-scores.jsonl"}) {
      artifacts[run].push_back(read_text(dir / f));
    }
  }
  fs::remove_all(root);
  Outcome o;
  for (std::size_t i = 0; i < artifacts[0].size(); ++i) {
    if (artifacts[0][i] != artifacts[1][i] || artifacts[0][i].empty()) o.ok = false;
  }
  o.detail = fmt("%zu files compared byte for byte across two runs", artifacts[0].size());
  if (!o.ok) o.detail += "; differences found";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"dataset counts", 1.0, dataset_counts},
      {"expected-gain tables", 1.0, gain_tables},
      {"random baselines by enumeration", 1.0, baselines},
      {"p-value fixture suite", 1.0, p_values},
      {"oracle scorer accuracy", 10.0, oracle_perfect},
      {"random scorer monte carlo", 60.0, monte_carlo},
      {"belief conditioned accuracy identities", 10.0, bca_identities},
      {"determinism", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += fmt(" (over the %.0f s budget)", c.budget_s);
    }
    if (!o.ok) ++failed;
    std::printf("%s %s: %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
