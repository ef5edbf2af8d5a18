#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betbench/oracle.hpp"
#include "betbench/templates.hpp"

namespace betbench {

/// An instance plus the ground truths embedded at generation time.
/// Evaluation reads these; it never re-derives them.
struct DatasetRecord {
  MCQAInstance instance;
  int standard_gt = 0;
  std::map<GtKind, SubsetSet> subset_gt;
  std::optional<bool> positive_applicable;  // bet questions only

  const std::string& id() const { return instance.id; }
  /// Throws if `kind` does not apply to this record.
  SubsetSet gt(GtKind kind) const;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

DatasetRecord annotate(MCQAInstance instance);
std::vector<DatasetRecord> annotate_all(std::vector<MCQAInstance> instances);

/// "bet-coin-test", "value-choice-valuable-dev", or "mixed".
std::string dataset_label(std::span<const DatasetRecord> records);

enum class QuestionFamily { Value, Bet, Mixed, Empty };
QuestionFamily family_of(std::span<const DatasetRecord> records);

}  // namespace betbench
