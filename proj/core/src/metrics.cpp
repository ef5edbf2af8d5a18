#include "betbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "betbench/errors.hpp"
#include "betbench/predict.hpp"

namespace betbench {

std::string_view to_string(Method method) {
  return method == Method::Standard ? "standard" : "threshold";
}

Method parse_method(std::string_view label) {
  if (label == "standard") return Method::Standard;
  if (label == "threshold") return Method::Threshold;
  throw ParseError("unknown predicting method '" + std::string(label) + "'");
}

Rational EvalSummary::accuracy_exact() const {
  if (n_effective() <= 0) return Rational(0);
  return Rational(n_correct, n_effective());
}

double EvalSummary::accuracy() const {
  if (n_effective() <= 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(n_correct) / n_effective();
}

std::vector<SinglePrediction> predict_standard(std::span<const ScoreRecord> scores) {
  std::vector<SinglePrediction> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back({s.id, standard_predict(s.normalized)});
  return out;
}

std::vector<SubsetPrediction> predict_threshold(std::span<const ScoreRecord> scores,
                                                double threshold) {
  const Threshold theta(threshold);
  std::vector<SubsetPrediction> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back({s.id, threshold_predict(s.normalized, theta)});
  return out;
}

namespace {

template <typename Prediction>
void check_alignment(std::span<const Prediction> predictions,
                     std::span<const DatasetRecord> dataset) {
  if (predictions.size() != dataset.size()) {
    throw ValidationError(std::to_string(predictions.size()) + " predictions for " +
                          std::to_string(dataset.size()) + " records");
  }
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (predictions[i].id != dataset[i].id()) {
      throw ValidationError("prediction id '" + predictions[i].id + "' does not match record '" +
                            dataset[i].id() + "'");
    }
  }
}

void attach_test(EvalSummary& s) {
  if (s.n_effective() < 2) {
    s.z = std::numeric_limits<double>::quiet_NaN();
    s.p_value = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  const TestResult t = ztest(s.n_correct, s.n_effective(), s.baseline);
  s.z = t.z;
  s.p_value = t.p;
}

}  // namespace

EvalSummary accuracy_standard(std::span<const SinglePrediction> predictions,
                              std::span<const DatasetRecord> dataset) {
  check_alignment(predictions, dataset);
  EvalSummary s;
  s.metric = "acc";
  s.method = Method::Standard;
  s.n_total = static_cast<int>(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (predictions[i].index == dataset[i].standard_gt) ++s.n_correct;
  }
  s.baseline = Rational(1, 3);
  attach_test(s);
  return s;
}

EvalSummary accuracy_threshold(std::span<const SubsetPrediction> predictions,
                               std::span<const DatasetRecord> dataset, GtKind kind) {
  check_alignment(predictions, dataset);
  EvalSummary s;
  s.metric = std::string(to_string(kind));
  s.method = Method::Threshold;
  s.n_total = static_cast<int>(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (kind == GtKind::PositiveGain && !dataset[i].positive_applicable.value_or(false)) {
      ++s.n_excluded;
      continue;
    }
    if (dataset[i].gt(kind).contains(predictions[i].subset)) ++s.n_correct;
  }
  if (s.n_effective() > 0) s.baseline = random_baseline(kind, dataset);
  attach_test(s);
  return s;
}

Belief belief_from_choice(int canonical_index) {
  switch (canonical_index) {
    case 0: return Belief::HGreater;
    case 1: return Belief::LGreater;
    case 2: return Belief::Equal;
  }
  throw ValidationError("choice index out of range");
}

BeliefTable elicit_beliefs(Scorer& scorer, const Catalog& catalog, Split split,
                           const BeliefElicitation& how) {
  auto answers_for = [&](ValueTemplate t) {
    const auto records = annotate_all(generate(catalog, split, DatasetSpec{t}));
    const auto scores = scorer.score_all(records);
    std::vector<Belief> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      const int pos = standard_predict(scores[i].normalized);
      out.push_back(belief_from_choice(records[i].instance.canonical_index(pos)));
    }
    return out;
  };

  const auto item_pairs = pairs(catalog, split);
  BeliefTable table;
  if (how.single) {
    const auto answers = answers_for(*how.single);
    for (std::size_t i = 0; i < item_pairs.size(); ++i) {
      table.set(item_pairs[i].high.name, item_pairs[i].low.name, answers[i]);
    }
    return table;
  }

  std::vector<std::vector<Belief>> per_template;
  for (ValueTemplate t : kAllValueTemplates) per_template.push_back(answers_for(t));
  const auto& tie_break = per_template.back();  // ChoiceValuable
  for (std::size_t i = 0; i < item_pairs.size(); ++i) {
    std::array<int, 3> counts{};
    for (const auto& answers : per_template) ++counts[static_cast<std::size_t>(answers[i])];
    const int top = *std::max_element(counts.begin(), counts.end());
    Belief chosen = tie_break[i];
    if (counts[static_cast<std::size_t>(chosen)] != top) {
      chosen = static_cast<Belief>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    }
    table.set(item_pairs[i].high.name, item_pairs[i].low.name, chosen);
  }
  return table;
}

int bca_gt(const MCQAInstance& instance, Belief belief) {
  const BetQuestion& bet = instance.bet();
  switch (belief) {
    case Belief::HGreater:
      return standard_gt(instance);
    case Belief::LGreater: {
      // The believed-high item takes the H role, i.e. the win tier flips.
      BetVariant swapped = bet.variant;
      swapped.win_tier = swapped.win_tier == Tier::High ? Tier::Low : Tier::High;
      return instance.display_position(standard_gt_canonical(swapped));
    }
    case Belief::Equal:
      return instance.display_position(kNoBet);
  }
  return instance.display_position(kNoBet);
}

EvalSummary bca(std::span<const SinglePrediction> predictions,
                std::span<const DatasetRecord> dataset, const BeliefTable& beliefs) {
  check_alignment(predictions, dataset);
  EvalSummary s;
  s.metric = "bca";
  s.method = Method::Standard;
  s.n_total = static_cast<int>(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& inst = dataset[i].instance;
    const Belief belief = beliefs.at(inst.high_item(), inst.low_item());
    if (predictions[i].index == bca_gt(inst, belief)) ++s.n_correct;
  }
  s.baseline = Rational(1, 3);
  attach_test(s);
  return s;
}

}  // namespace betbench
