#include "betbench/oracle.hpp"

#include "betbench/errors.hpp"

namespace betbench {

std::string to_string(PredictionSubset subset) {
  std::string out = "{";
  for (int i = 0; i < 3; ++i) {
    if (!subset.contains(i)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

std::array<PredictionSubset, 8> all_subsets() {
  std::array<PredictionSubset, 8> out;
  for (std::uint8_t m = 0; m < 8; ++m) out[m] = PredictionSubset(m);
  return out;
}

SubsetSet SubsetSet::of(std::initializer_list<PredictionSubset> subsets) {
  SubsetSet set;
  for (auto s : subsets) set.insert(s);
  return set;
}

int SubsetSet::size() const noexcept {
  int n = 0;
  for (int m = 0; m < 8; ++m) n += (bits_ >> m) & 1;
  return n;
}

std::vector<int> SubsetSet::masks() const {
  std::vector<int> out;
  for (int m = 0; m < 8; ++m) {
    if ((bits_ >> m) & 1) out.push_back(m);
  }
  return out;
}

std::string_view to_string(GtKind kind) {
  switch (kind) {
    case GtKind::Normal: return "normal";
    case GtKind::WeakNormal: return "weak_normal";
    case GtKind::Weak: return "weak";
    case GtKind::Strict: return "strict";
    case GtKind::PositiveGain: return "positive_gain";
    case GtKind::NonNegativeGain: return "non_negative_gain";
  }
  return "?";
}

GtKind parse_gt_kind(std::string_view label) {
  for (GtKind k : {GtKind::Normal, GtKind::WeakNormal, GtKind::Weak, GtKind::Strict,
                   GtKind::PositiveGain, GtKind::NonNegativeGain}) {
    if (to_string(k) == label) return k;
  }
  throw ParseError("unknown ground-truth kind '" + std::string(label) + "'");
}

bool is_value_gt(GtKind kind) {
  return kind == GtKind::Normal || kind == GtKind::WeakNormal || kind == GtKind::Weak;
}

GainExpr role_gain(BetRole role, const BetVariant& variant) {
  const Rational half(1, 2);
  const bool wins_high = variant.win_tier == Tier::High;
  switch (role) {
    case BetRole::BetWin:
      // 0.5*(item + X) + 0.5*0 - X
      return wins_high ? GainExpr{half, 0, -half} : GainExpr{0, half, -half};
    case BetRole::BetLose:
      // 0.5*0 + 0.5*(-item + X) - X
      return wins_high ? GainExpr{0, -half, -half} : GainExpr{-half, 0, -half};
    case BetRole::NoBet:
      return GainExpr::zero();
  }
  return GainExpr::zero();
}

BetRole role_of(int canonical_choice, const BetVariant& variant) {
  if (canonical_choice == kNoBet) return BetRole::NoBet;
  return canonical_choice == variant.win_outcome ? BetRole::BetWin : BetRole::BetLose;
}

SubsetGain subset_gain(PredictionSubset s, const BetVariant& variant) {
  if (s.empty()) return NonDecision{};
  if (s.contains(kNoBet) && s.size() > 1) return Contradiction{};
  if (s.size() == 1) {
    for (int i = 0; i < 3; ++i) {
      if (s.contains(i)) return role_gain(role_of(i, variant), variant);
    }
  }
  // Both bets: half the wager on each outcome, so each contributes half its singleton gain.
  const Rational half(1, 2);
  return half * role_gain(BetRole::BetWin, variant) + half * role_gain(BetRole::BetLose, variant);
}

int standard_gt_canonical(const BetVariant& variant) {
  std::array<GainExpr, 3> gains;
  for (int i = 0; i < 3; ++i) gains[i] = role_gain(role_of(i, variant), variant);

  int best = -1;
  for (int i = 0; i < 3; ++i) {
    bool dominates = true;
    for (int j = 0; j < 3 && dominates; ++j) {
      if (j != i) dominates = determinate_sign(gains[i] - gains[j]) == Sign::Positive;
    }
    if (!dominates) continue;
    if (best != -1) throw OracleError("expected-gain maximum is not unique");
    best = i;
  }
  if (best == -1) throw OracleError("no choice strictly maximizes expected gain");
  return best;
}

int standard_gt(const MCQAInstance& instance) {
  const int canonical = instance.is_bet() ? standard_gt_canonical(instance.bet().variant) : 0;
  return instance.display_position(canonical);
}

SubsetSet bet_subset_gt_canonical(const BetVariant& variant, GtKind kind) {
  if (is_value_gt(kind)) {
    throw ValidationError("ground truth '" + std::string(to_string(kind)) +
                          "' does not apply to bet questions");
  }
  if (kind == GtKind::Strict) {
    return SubsetSet::of({PredictionSubset::of({standard_gt_canonical(variant)})});
  }
  SubsetSet out;
  for (PredictionSubset s : all_subsets()) {
    const auto gain = subset_gain(s, variant);
    const auto* expr = std::get_if<GainExpr>(&gain);
    if (expr == nullptr) continue;
    const Sign sign = determinate_sign(*expr);
    if (sign == Sign::Positive || (kind == GtKind::NonNegativeGain && sign == Sign::Zero)) {
      out.insert(s);
    }
  }
  return out;
}

SubsetSet bet_subset_gt(const MCQAInstance& instance, GtKind kind) {
  return to_display(bet_subset_gt_canonical(instance.bet().variant, kind), instance.permutation);
}

SubsetSet value_subset_gt_canonical(GtKind kind) {
  const auto h_statement = PredictionSubset::of({0});
  switch (kind) {
    case GtKind::Normal:
      return SubsetSet::of({h_statement});
    case GtKind::WeakNormal:
      return SubsetSet::of({h_statement, PredictionSubset::of({0, 2})});
    case GtKind::Weak: {
      SubsetSet out;
      for (PredictionSubset s : all_subsets()) {
        const bool contradiction = s == PredictionSubset::of({0, 1, 2}) ||
                                   s == PredictionSubset::of({0, 1});
        if (!contradiction && !s.empty()) out.insert(s);
      }
      return out;
    }
    default:
      throw ValidationError("ground truth '" + std::string(to_string(kind)) +
                            "' does not apply to value questions");
  }
}

SubsetSet value_subset_gt(const MCQAInstance& instance, GtKind kind) {
  (void)instance.value();
  return to_display(value_subset_gt_canonical(kind), instance.permutation);
}

bool positive_applicable(const MCQAInstance& instance) {
  return !bet_subset_gt(instance, GtKind::PositiveGain).empty();
}

SubsetSet subset_gt(const MCQAInstance& instance, GtKind kind) {
  return instance.is_bet() ? bet_subset_gt(instance, kind) : value_subset_gt(instance, kind);
}

PredictionSubset to_display(PredictionSubset canonical, const ChoicePermutation& permutation) {
  std::uint8_t mask = 0;
  for (int pos = 0; pos < 3; ++pos) {
    if (canonical.contains(permutation[static_cast<std::size_t>(pos)])) {
      mask |= static_cast<std::uint8_t>(1u << pos);
    }
  }
  return PredictionSubset(mask);
}

SubsetSet to_display(SubsetSet canonical, const ChoicePermutation& permutation) {
  SubsetSet out;
  for (PredictionSubset s : all_subsets()) {
    if (canonical.contains(s)) out.insert(to_display(s, permutation));
  }
  return out;
}

}  // namespace betbench
