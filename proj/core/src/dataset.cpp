#include "betbench/dataset.hpp"

#include "betbench/errors.hpp"

namespace betbench {

SubsetSet DatasetRecord::gt(GtKind kind) const {
  auto it = subset_gt.find(kind);
  if (it == subset_gt.end()) {
    throw ValidationError("record '" + id() + "' has no '" + std::string(to_string(kind)) +
                          "' ground truth");
  }
  return it->second;
}

DatasetRecord annotate(MCQAInstance instance) {
  DatasetRecord record;
  record.standard_gt = standard_gt(instance);
  if (instance.is_bet()) {
    for (GtKind k : kBetGtKinds) record.subset_gt[k] = bet_subset_gt(instance, k);
    record.positive_applicable = positive_applicable(instance);
  } else {
    for (GtKind k : kValueGtKinds) record.subset_gt[k] = value_subset_gt(instance, k);
  }
  record.instance = std::move(instance);
  return record;
}

std::vector<DatasetRecord> annotate_all(std::vector<MCQAInstance> instances) {
  std::vector<DatasetRecord> out;
  out.reserve(instances.size());
  for (auto& inst : instances) out.push_back(annotate(std::move(inst)));
  return out;
}

QuestionFamily family_of(std::span<const DatasetRecord> records) {
  if (records.empty()) return QuestionFamily::Empty;
  const bool first_bet = records.front().instance.is_bet();
  for (const auto& r : records) {
    if (r.instance.is_bet() != first_bet) return QuestionFamily::Mixed;
  }
  return first_bet ? QuestionFamily::Bet : QuestionFamily::Value;
}

namespace {

std::string family_name(const MCQAInstance& inst) {
  if (inst.is_bet()) return "bet-" + std::string(to_string(inst.bet().modality));
  return "value-" + std::string(to_string(inst.value().kind));
}

}  // namespace

std::string dataset_label(std::span<const DatasetRecord> records) {
  if (records.empty()) return "empty";
  const std::string family = family_name(records.front().instance);
  const Split split = records.front().instance.split;
  for (const auto& r : records) {
    if (family_name(r.instance) != family || r.instance.split != split) return "mixed";
  }
  return family + "-" + std::string(to_string(split));
}

}  // namespace betbench
