#pragma once

#include <span>
#include <vector>

#include "betbench/dataset.hpp"
#include "betbench/oracle.hpp"
#include "betbench/scoring.hpp"

namespace betbench {

/// Threshold in [0, 1]; construction outside the range throws ValidationError.
class Threshold {
 public:
  explicit Threshold(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(Threshold, Threshold) = default;

 private:
  double value_;
};

/// Lowest index attaining the maximum score.
int standard_predict(const Scores& scores);

/// { i : scores[i] > threshold }; may be empty.
PredictionSubset threshold_predict(const Scores& scores, Threshold threshold);

struct CalibrationExample {
  Scores normalized{};
  SubsetSet correct;
};

struct GridSearchResult {
  Threshold threshold{0.0};
  int best_correct = 0;
  int examples = 0;
  std::vector<int> maximizers;  // grid indices k, for candidate k/100
};

inline constexpr int kGridSteps = 100;

/// Scans theta = k/100 for k = 0..100 and returns the median of the
/// accuracy-maximizing candidates (mean of the middle two when even).
/// Throws ValidationError when `examples` is empty.
GridSearchResult grid_search(std::span<const CalibrationExample> examples);

/// Builds calibration examples from scored dev records under `kind`; for
/// PositiveGain only positive-applicable records are kept.
std::vector<CalibrationExample> calibration_set(std::span<const DatasetRecord> dev,
                                                std::span<const ScoreRecord> scores, GtKind kind);

}  // namespace betbench
