#include "betbench/templates.hpp"

#include <algorithm>

#include "betbench/errors.hpp"
#include "betbench/hash.hpp"

namespace betbench {

std::string_view to_string(ValueTemplate kind) {
  switch (kind) {
    case ValueTemplate::BooleanExpensive: return "boolean-expensive";
    case ValueTemplate::BooleanValuable: return "boolean-valuable";
    case ValueTemplate::ChoiceExpensive: return "choice-expensive";
    case ValueTemplate::ChoiceValuable: return "choice-valuable";
  }
  return "?";
}

std::string_view to_string(BetModality modality) {
  switch (modality) {
    case BetModality::Coin: return "coin";
    case BetModality::Dice: return "dice";
    case BetModality::Card: return "card";
  }
  return "?";
}

ValueTemplate parse_value_template(std::string_view label) {
  for (ValueTemplate t : kAllValueTemplates) {
    if (to_string(t) == label) return t;
  }
  throw ParseError("unknown value template '" + std::string(label) + "'");
}

BetModality parse_modality(std::string_view label) {
  for (BetModality m : kAllModalities) {
    if (to_string(m) == label) return m;
  }
  throw ParseError("unknown bet modality '" + std::string(label) + "'");
}

std::array<std::string_view, 2> outcome_labels(BetModality modality) {
  switch (modality) {
    case BetModality::Coin: return {"heads", "tails"};
    case BetModality::Dice: return {"even", "odd"};
    case BetModality::Card: return {"red", "black"};
  }
  return {"?", "?"};
}

const BetQuestion& MCQAInstance::bet() const {
  if (const auto* b = std::get_if<BetQuestion>(&kind)) return *b;
  throw ValidationError("instance '" + id + "' is not a bet question");
}

const ValueQuestion& MCQAInstance::value() const {
  if (const auto* v = std::get_if<ValueQuestion>(&kind)) return *v;
  throw ValidationError("instance '" + id + "' is not a value question");
}

const std::string& MCQAInstance::high_item() const {
  return std::visit([](const auto& q) -> const std::string& { return q.high; }, kind);
}

const std::string& MCQAInstance::low_item() const {
  return std::visit([](const auto& q) -> const std::string& { return q.low; }, kind);
}

std::string MCQAInstance::pair(int pos) const {
  return prompt + " " + choices.at(static_cast<std::size_t>(pos));
}

int MCQAInstance::display_position(int canonical) const {
  auto it = std::find(permutation.begin(), permutation.end(), canonical);
  if (it == permutation.end()) throw ValidationError("bad choice permutation in '" + id + "'");
  return static_cast<int>(it - permutation.begin());
}

std::string instance_id(const QuestionKind& kind) {
  if (const auto* v = std::get_if<ValueQuestion>(&kind)) {
    return "value-" + std::string(to_string(v->kind)) + "-" + v->high + "-" + v->low;
  }
  const auto& b = std::get<BetQuestion>(kind);
  return "bet-" + std::string(to_string(b.modality)) + "-" + b.high + "-" + b.low + "-w" +
         std::to_string(b.variant.win_outcome) + (b.variant.win_tier == Tier::High ? "H" : "L");
}

namespace {

void check_roles(const Item& high, const Item& low) {
  if (high.tier != Tier::High) {
    throw ValidationError("'" + high.name + "' is not a high-value item");
  }
  if (low.tier != Tier::Low) {
    throw ValidationError("'" + low.name + "' is not a low-value item");
  }
  if (high.split != low.split) {
    throw ValidationError("'" + high.name + "' and '" + low.name + "' are in different splits");
  }
}

}  // namespace

MCQAInstance render_value(ValueTemplate kind, const Item& high, const Item& low) {
  check_roles(high, low);
  const std::string& h = high.name;
  const std::string& l = low.name;

  MCQAInstance inst;
  inst.kind = ValueQuestion{kind, h, l};
  inst.id = instance_id(inst.kind);
  inst.split = high.split;

  const bool expensive =
      kind == ValueTemplate::BooleanExpensive || kind == ValueTemplate::ChoiceExpensive;
  const std::string adjective = expensive ? "expensive" : "valuable";
  switch (kind) {
    case ValueTemplate::BooleanExpensive:
    case ValueTemplate::BooleanValuable:
      inst.prompt = "This statement is true:";
      inst.choices = {h + " is more " + adjective + " than " + l,
                      l + " is more " + adjective + " than " + h,
                      h + " and " + l + " have the same value"};
      break;
    case ValueTemplate::ChoiceExpensive:
    case ValueTemplate::ChoiceValuable:
      inst.prompt = "From " + h + " and " + l + ", choose an item that is more " + adjective + ":";
      inst.choices = {h, l, "the same"};
      break;
  }
  return inst;
}

MCQAInstance render_bet(BetModality modality, const Item& high, const Item& low,
                        BetVariant variant) {
  check_roles(high, low);
  if (variant.win_outcome != 0 && variant.win_outcome != 1) {
    throw ValidationError("win_outcome must be 0 or 1");
  }

  MCQAInstance inst;
  inst.kind = BetQuestion{modality, high.name, low.name, variant};
  inst.id = instance_id(inst.kind);
  inst.split = high.split;

  const auto outcomes = outcome_labels(modality);
  const std::string& won = variant.win_tier == Tier::High ? high.name : low.name;
  const std::string& lost = variant.win_tier == Tier::High ? low.name : high.name;
  // Clause for each outcome in template order; the win event sits on win_outcome.
  auto clause = [&](int outcome) {
    return outcome == variant.win_outcome ? "then I win a " + won : "then I lose a " + lost;
  };
  const std::string o0(outcomes[0]);
  const std::string o1(outcomes[1]);

  switch (modality) {
    case BetModality::Coin:
      inst.prompt = "If the coin comes up " + o0 + ", " + clause(0) + ". If it comes up " + o1 +
                    ", " + clause(1) + ". What should I do to maximize my expected gains?";
      break;
    case BetModality::Dice:
      inst.prompt = "If the dice comes up " + o0 + ", " + clause(0) + ". If it comes up " + o1 +
                    ", " + clause(1) + ". What should I do to maximize my expected gains?";
      break;
    case BetModality::Card:
      inst.prompt = "If I pick a card from a standard deck of cards, and the card is " + o0 + " " +
                    clause(0) + ". If it is " + o1 + ", " + clause(1) +
                    ". What should I do to maximize my expected gains?";
      break;
  }
  inst.choices = {"I should bet on " + o0, "I should bet on " + o1,
                  "I should not bet on either one"};
  return inst;
}

MCQAInstance shuffle_choices(MCQAInstance instance, std::uint64_t seed) {
  static constexpr std::array<ChoicePermutation, 6> kPermutations{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const std::uint64_t h = hash_combine(splitmix64(seed), fnv1a64(instance.id));
  const ChoicePermutation perm = kPermutations[h % kPermutations.size()];

  // Compose with any existing permutation so canonical indices stay correct.
  std::array<std::string, 3> canonical;
  for (int pos = 0; pos < 3; ++pos) {
    canonical[static_cast<std::size_t>(instance.canonical_index(pos))] =
        instance.choices[static_cast<std::size_t>(pos)];
  }
  for (std::size_t pos = 0; pos < 3; ++pos) {
    instance.choices[pos] = canonical[static_cast<std::size_t>(perm[pos])];
  }
  instance.permutation = perm;
  return instance;
}

std::vector<MCQAInstance> generate(const Catalog& catalog, Split split, const DatasetSpec& spec,
                                   const GenerateOptions& options) {
  std::vector<MCQAInstance> out;
  for (const auto& [high, low] : pairs(catalog, split)) {
    if (const auto* t = std::get_if<ValueTemplate>(&spec.family)) {
      out.push_back(render_value(*t, high, low));
    } else {
      const BetModality m = std::get<BetModality>(spec.family);
      for (const auto& variant : kAllBetVariants) out.push_back(render_bet(m, high, low, variant));
    }
  }
  if (options.shuffle_choices) {
    for (auto& inst : out) inst = shuffle_choices(std::move(inst), options.seed);
  }
  return out;
}

}  // namespace betbench
