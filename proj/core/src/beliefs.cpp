#include "betbench/beliefs.hpp"

#include "betbench/errors.hpp"

namespace betbench {

std::string_view to_string(Belief belief) {
  switch (belief) {
    case Belief::HGreater: return "h-greater";
    case Belief::LGreater: return "l-greater";
    case Belief::Equal: return "equal";
  }
  return "?";
}

Belief parse_belief(std::string_view label) {
  for (Belief b : {Belief::HGreater, Belief::LGreater, Belief::Equal}) {
    if (to_string(b) == label) return b;
  }
  throw ParseError("unknown belief '" + std::string(label) + "'");
}

void BeliefTable::set(const std::string& high, const std::string& low, Belief belief) {
  beliefs_[{high, low}] = belief;
}

std::optional<Belief> BeliefTable::find(const std::string& high, const std::string& low) const {
  auto it = beliefs_.find({high, low});
  if (it == beliefs_.end()) return std::nullopt;
  return it->second;
}

Belief BeliefTable::at(const std::string& high, const std::string& low) const {
  if (auto b = find(high, low)) return *b;
  throw ValidationError("no belief recorded for pair (" + high + ", " + low + ")");
}

}  // namespace betbench
