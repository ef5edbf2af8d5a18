#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace betbench {

/// A scorer's elicited value preference for one (high, low) pair.
enum class Belief { HGreater, LGreater, Equal };

std::string_view to_string(Belief belief);  // "h-greater", "l-greater", "equal"
Belief parse_belief(std::string_view label);

/// One belief per (high item, low item) pair.
class BeliefTable {
 public:
  void set(const std::string& high, const std::string& low, Belief belief);
  std::optional<Belief> find(const std::string& high, const std::string& low) const;
  /// Throws ValidationError naming the pair when absent.
  Belief at(const std::string& high, const std::string& low) const;

  std::size_t size() const noexcept { return beliefs_.size(); }
  const std::map<std::pair<std::string, std::string>, Belief>& entries() const noexcept {
    return beliefs_;
  }

  friend bool operator==(const BeliefTable&, const BeliefTable&) = default;

 private:
  std::map<std::pair<std::string, std::string>, Belief> beliefs_;
};

}  // namespace betbench
