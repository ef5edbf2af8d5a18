#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betbench/catalog.hpp"

namespace betbench {

enum class ValueTemplate { BooleanExpensive, BooleanValuable, ChoiceExpensive, ChoiceValuable };
enum class BetModality { Coin, Dice, Card };

inline constexpr std::array<ValueTemplate, 4> kAllValueTemplates{
    ValueTemplate::BooleanExpensive, ValueTemplate::BooleanValuable,
    ValueTemplate::ChoiceExpensive, ValueTemplate::ChoiceValuable};
inline constexpr std::array<BetModality, 3> kAllModalities{BetModality::Coin, BetModality::Dice,
                                                          BetModality::Card};

std::string_view to_string(ValueTemplate kind);  // "choice-valuable"
std::string_view to_string(BetModality modality);  // "coin"
ValueTemplate parse_value_template(std::string_view label);
BetModality parse_modality(std::string_view label);

/// Ordered outcome labels: Coin (heads, tails), Dice (even, odd), Card (red, black).
std::array<std::string_view, 2> outcome_labels(BetModality modality);

/// Which outcome carries the win event, and which tier's item is won.
/// win_tier == High is a type-1 question, Low a type-2 question.
struct BetVariant {
  int win_outcome = 0;
  Tier win_tier = Tier::High;

  friend bool operator==(const BetVariant&, const BetVariant&) = default;
};

/// Canonical order: (w0,High), (w0,Low), (w1,High), (w1,Low).
inline constexpr std::array<BetVariant, 4> kAllBetVariants{
    BetVariant{0, Tier::High}, BetVariant{0, Tier::Low}, BetVariant{1, Tier::High},
    BetVariant{1, Tier::Low}};

struct ValueQuestion {
  ValueTemplate kind;
  std::string high;
  std::string low;

  friend bool operator==(const ValueQuestion&, const ValueQuestion&) = default;
};

struct BetQuestion {
  BetModality modality;
  std::string high;
  std::string low;
  BetVariant variant;

  friend bool operator==(const BetQuestion&, const BetQuestion&) = default;
};

using QuestionKind = std::variant<ValueQuestion, BetQuestion>;

/// Display position -> canonical choice index. Identity unless choices were shuffled.
using ChoicePermutation = std::array<int, 3>;
inline constexpr ChoicePermutation kIdentityPermutation{0, 1, 2};

/// One prompt with exactly three choices.
///
/// Canonical choice order is [h-statement, l-statement, equal-statement] for
/// value questions and [bet outcome0, bet outcome1, no-bet] for bet questions.
/// `choices` is in display order; `permutation[pos]` names the canonical
/// index shown at `pos`.
struct MCQAInstance {
  std::string id;
  QuestionKind kind;
  std::string prompt;
  std::array<std::string, 3> choices;
  Split split = Split::Test;
  ChoicePermutation permutation = kIdentityPermutation;

  bool is_bet() const noexcept { return std::holds_alternative<BetQuestion>(kind); }
  bool is_value() const noexcept { return std::holds_alternative<ValueQuestion>(kind); }
  const BetQuestion& bet() const;
  const ValueQuestion& value() const;
  const std::string& high_item() const;
  const std::string& low_item() const;

  /// The text a scorer receives for choice `pos`: prompt + " " + choice.
  std::string pair(int pos) const;
  int canonical_index(int pos) const { return permutation.at(static_cast<std::size_t>(pos)); }
  int display_position(int canonical) const;
  bool shuffled() const noexcept { return permutation != kIdentityPermutation; }

  friend bool operator==(const MCQAInstance&, const MCQAInstance&) = default;
};

std::string instance_id(const QuestionKind& kind);

/// Throws ValidationError unless high is a High item, low a Low item, same split.
MCQAInstance render_value(ValueTemplate kind, const Item& high, const Item& low);
MCQAInstance render_bet(BetModality modality, const Item& high, const Item& low,
                        BetVariant variant);

struct DatasetSpec {
  std::variant<ValueTemplate, BetModality> family;
};

struct GenerateOptions {
  bool shuffle_choices = false;
  std::uint64_t seed = 0;
};

/// Applies the seeded permutation derived from (seed, id) to an instance in canonical order.
MCQAInstance shuffle_choices(MCQAInstance instance, std::uint64_t seed);

/// Value: one instance per pair. Bet: four per pair, in kAllBetVariants order.
std::vector<MCQAInstance> generate(const Catalog& catalog, Split split, const DatasetSpec& spec,
                                   const GenerateOptions& options = {});

}  // namespace betbench
