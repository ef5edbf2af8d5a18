#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betbench/gain.hpp"
#include "betbench/templates.hpp"

namespace betbench {

/// A multi-label prediction over the three choices; bit i selects choice i.
class PredictionSubset {
 public:
  constexpr PredictionSubset() = default;
  constexpr explicit PredictionSubset(std::uint8_t mask) : mask_(mask & 0x7u) {}
  static constexpr PredictionSubset of(std::initializer_list<int> indices) {
    std::uint8_t m = 0;
    for (int i : indices) m |= static_cast<std::uint8_t>(1u << i);
    return PredictionSubset(m);
  }

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr bool contains(int index) const noexcept { return (mask_ >> index) & 1u; }
  constexpr int size() const noexcept { return (mask_ & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1); }
  constexpr bool empty() const noexcept { return mask_ == 0; }

  friend constexpr bool operator==(PredictionSubset, PredictionSubset) = default;
  friend constexpr auto operator<=>(PredictionSubset, PredictionSubset) = default;

 private:
  std::uint8_t mask_ = 0;
};

std::string to_string(PredictionSubset subset);  // "{0,2}"

/// Every subset of {0,1,2}, by mask value.
std::array<PredictionSubset, 8> all_subsets();

/// A set of PredictionSubsets: bit s set iff the subset with mask s is included.
class SubsetSet {
 public:
  constexpr SubsetSet() = default;
  constexpr explicit SubsetSet(std::uint8_t bits) : bits_(bits) {}
  static SubsetSet of(std::initializer_list<PredictionSubset> subsets);

  constexpr bool contains(PredictionSubset s) const noexcept { return (bits_ >> s.mask()) & 1u; }
  void insert(PredictionSubset s) { bits_ |= static_cast<std::uint8_t>(1u << s.mask()); }
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  /// Masks in ascending order.
  std::vector<int> masks() const;

  friend constexpr bool operator==(SubsetSet, SubsetSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class GtKind { Normal, WeakNormal, Weak, Strict, PositiveGain, NonNegativeGain };

inline constexpr std::array<GtKind, 3> kValueGtKinds{GtKind::Normal, GtKind::WeakNormal,
                                                     GtKind::Weak};
inline constexpr std::array<GtKind, 3> kBetGtKinds{GtKind::Strict, GtKind::PositiveGain,
                                                   GtKind::NonNegativeGain};

std::string_view to_string(GtKind kind);  // "weak_normal", "positive_gain", ...
GtKind parse_gt_kind(std::string_view label);
bool is_value_gt(GtKind kind);

// Canonical choice indices of a bet question.
inline constexpr int kBetOutcome0 = 0;
inline constexpr int kBetOutcome1 = 1;
inline constexpr int kNoBet = 2;

enum class BetRole { BetWin, BetLose, NoBet };

/// Expected gain of a single canonical choice. win_tier High: BetWin 1/2(H-X),
/// BetLose 1/2(-L-X); win_tier Low: BetWin 1/2(L-X), BetLose 1/2(-H-X); NoBet 0.
GainExpr role_gain(BetRole role, const BetVariant& variant);
BetRole role_of(int canonical_choice, const BetVariant& variant);

struct Contradiction {
  friend bool operator==(Contradiction, Contradiction) = default;
};
struct NonDecision {
  friend bool operator==(NonDecision, NonDecision) = default;
};
using SubsetGain = std::variant<GainExpr, Contradiction, NonDecision>;

/// Expected gain of a canonical-order prediction subset on a bet question.
/// Betting on both outcomes splits the wager equally between them.
SubsetGain subset_gain(PredictionSubset canonical, const BetVariant& variant);

/// Index (display order) of the unique expected-gain-maximizing choice; for a
/// value question the h-statement. Throws OracleError on a non-unique argmax.
int standard_gt(const MCQAInstance& instance);
/// Same, in canonical order, for a bet variant.
int standard_gt_canonical(const BetVariant& variant);

/// Correct prediction subsets (display order) for a bet question.
SubsetSet bet_subset_gt(const MCQAInstance& instance, GtKind kind);
SubsetSet bet_subset_gt_canonical(const BetVariant& variant, GtKind kind);

/// Correct prediction subsets (display order) for a value question.
SubsetSet value_subset_gt(const MCQAInstance& instance, GtKind kind);
SubsetSet value_subset_gt_canonical(GtKind kind);

/// True iff some subset has strictly positive expected gain. Throws on value questions.
bool positive_applicable(const MCQAInstance& instance);

/// Dispatches to value_subset_gt / bet_subset_gt; throws if the kind does not
/// apply to the instance's question family.
SubsetSet subset_gt(const MCQAInstance& instance, GtKind kind);

PredictionSubset to_display(PredictionSubset canonical, const ChoicePermutation& permutation);
SubsetSet to_display(SubsetSet canonical, const ChoicePermutation& permutation);

}  // namespace betbench
