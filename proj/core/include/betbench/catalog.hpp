#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betbench {

enum class Tier { High, Low };
enum class Split { Train, Dev, Test };

inline constexpr std::array<Split, 3> kAllSplits{Split::Train, Split::Dev, Split::Test};
inline constexpr std::array<Tier, 2> kAllTiers{Tier::High, Tier::Low};

std::string_view to_string(Tier tier);
std::string_view to_string(Split split);
/// Throws ParseError on an unknown label.
Tier parse_tier(std::string_view label);
Split parse_split(std::string_view label);

struct Item {
  std::string name;
  Tier tier = Tier::High;
  Split split = Split::Train;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Immutable set of high/low-value items partitioned into train/dev/test.
///
/// Construction validates: names are non-empty lowercase tokens, unique across
/// the catalog, and each of the six (tier, split) buckets holds at least one
/// item. Item order is preserved; it drives pair and instance ordering.
class Catalog {
 public:
  explicit Catalog(std::vector<Item> items);

  const std::vector<Item>& items() const noexcept { return items_; }
  std::vector<Item> bucket(Tier tier, Split split) const;
  std::optional<Item> find(std::string_view name) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<Item> items_;
};

/// The item lists used by the benchmark, verbatim.
const Catalog& default_catalog();

/// Parses the JSON catalog document:
///   {"train": {"high": [...], "low": [...]}, "dev": {...}, "test": {...}}
Catalog load_catalog(std::string_view document);
std::string dump_catalog(const Catalog& catalog);

struct ItemPair {
  Item high;
  Item low;
};

/// High(split) x Low(split), high-major in catalog order.
std::vector<ItemPair> pairs(const Catalog& catalog, Split split);

}  // namespace betbench
