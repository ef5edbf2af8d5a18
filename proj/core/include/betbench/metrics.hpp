#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betbench/beliefs.hpp"
#include "betbench/catalog.hpp"
#include "betbench/dataset.hpp"
#include "betbench/gain.hpp"
#include "betbench/oracle.hpp"
#include "betbench/scoring.hpp"
#include "betbench/stats.hpp"

namespace betbench {

struct SinglePrediction {
  std::string id;
  int index = 0;
};

struct SubsetPrediction {
  std::string id;
  PredictionSubset subset;
};

enum class Method { Standard, Threshold };
std::string_view to_string(Method method);
Method parse_method(std::string_view label);

/// One report row.
struct EvalSummary {
  std::string scorer;
  std::string dataset;
  std::string metric;  // "acc", "bca", or a ground-truth kind name
  Method method = Method::Standard;
  std::optional<double> threshold;
  std::string dev_dataset;  // threshold rows: where theta was selected
  int n_total = 0;
  int n_excluded = 0;
  int n_correct = 0;
  Rational baseline{1, 3};
  double z = 0.0;
  double p_value = 1.0;

  int n_effective() const noexcept { return n_total - n_excluded; }
  Rational accuracy_exact() const;
  double accuracy() const;
};

std::vector<SinglePrediction> predict_standard(std::span<const ScoreRecord> scores);
std::vector<SubsetPrediction> predict_threshold(std::span<const ScoreRecord> scores,
                                                double threshold);

EvalSummary accuracy_standard(std::span<const SinglePrediction> predictions,
                              std::span<const DatasetRecord> dataset);
EvalSummary accuracy_threshold(std::span<const SubsetPrediction> predictions,
                               std::span<const DatasetRecord> dataset, GtKind kind);

/// Which value template(s) to elicit beliefs with. Mode scores all four and
/// takes the most frequent answer, ties resolved by the ChoiceValuable answer.
struct BeliefElicitation {
  std::optional<ValueTemplate> single = ValueTemplate::ChoiceValuable;  // nullopt = mode
};

BeliefTable elicit_beliefs(Scorer& scorer, const Catalog& catalog, Split split,
                           const BeliefElicitation& how = {});

/// Belief implied by a standard-method answer (canonical index) on a value question.
Belief belief_from_choice(int canonical_index);

/// The rational choice (display order) on a bet question given the belief about its pair.
int bca_gt(const MCQAInstance& instance, Belief belief);

EvalSummary bca(std::span<const SinglePrediction> predictions,
                std::span<const DatasetRecord> dataset, const BeliefTable& beliefs);

}  // namespace betbench
