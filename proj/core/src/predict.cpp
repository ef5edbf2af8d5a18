#include "betbench/predict.hpp"

#include "betbench/errors.hpp"

namespace betbench {

Threshold::Threshold(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) throw ValidationError("threshold must lie in [0, 1]");
}

int standard_predict(const Scores& scores) {
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (scores[static_cast<std::size_t>(i)] > scores[static_cast<std::size_t>(best)]) best = i;
  }
  return best;
}

PredictionSubset threshold_predict(const Scores& scores, Threshold threshold) {
  std::uint8_t mask = 0;
  for (int i = 0; i < 3; ++i) {
    if (scores[static_cast<std::size_t>(i)] > threshold.value()) {
      mask |= static_cast<std::uint8_t>(1u << i);
    }
  }
  return PredictionSubset(mask);
}

GridSearchResult grid_search(std::span<const CalibrationExample> examples) {
  if (examples.empty()) throw ValidationError("threshold grid search needs a non-empty dev set");

  GridSearchResult result;
  result.examples = static_cast<int>(examples.size());
  result.best_correct = -1;
  for (int k = 0; k <= kGridSteps; ++k) {
    const Threshold theta(static_cast<double>(k) / kGridSteps);
    int correct = 0;
    for (const auto& ex : examples) {
      if (ex.correct.contains(threshold_predict(ex.normalized, theta))) ++correct;
    }
    if (correct > result.best_correct) {
      result.best_correct = correct;
      result.maximizers.clear();
    }
    if (correct == result.best_correct) result.maximizers.push_back(k);
  }

  const auto& m = result.maximizers;
  const std::size_t mid = m.size() / 2;
  const double median = m.size() % 2 == 1
                            ? static_cast<double>(m[mid]) / kGridSteps
                            : static_cast<double>(m[mid - 1] + m[mid]) / (2.0 * kGridSteps);
  result.threshold = Threshold(median);
  return result;
}

std::vector<CalibrationExample> calibration_set(std::span<const DatasetRecord> dev,
                                                std::span<const ScoreRecord> scores,
                                                GtKind kind) {
  if (dev.size() != scores.size()) {
    throw ValidationError("dev set has " + std::to_string(dev.size()) + " records but " +
                          std::to_string(scores.size()) + " scores");
  }
  std::vector<CalibrationExample> out;
  for (std::size_t i = 0; i < dev.size(); ++i) {
    if (dev[i].id() != scores[i].id) {
      throw ValidationError("score id '" + scores[i].id + "' does not match dev record '" +
                            dev[i].id() + "'");
    }
    if (kind == GtKind::PositiveGain && !dev[i].positive_applicable.value_or(false)) continue;
    out.push_back({scores[i].normalized, dev[i].gt(kind)});
  }
  return out;
}

}  // namespace betbench
