#include "betbench/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "betbench/errors.hpp"

namespace betbench {

std::string_view to_string(Tier tier) { return tier == Tier::High ? "high" : "low"; }

std::string_view to_string(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Dev: return "dev";
    case Split::Test: return "test";
  }
  return "?";
}

Tier parse_tier(std::string_view label) {
  if (label == "high") return Tier::High;
  if (label == "low") return Tier::Low;
  throw ParseError("unknown tier label '" + std::string(label) + "'");
}

Split parse_split(std::string_view label) {
  if (label == "train") return Split::Train;
  if (label == "dev") return Split::Dev;
  if (label == "test") return Split::Test;
  throw ParseError("unknown split label '" + std::string(label) + "'");
}

namespace {

bool is_lowercase_token(const std::string& name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || std::isupper(c) || std::iscntrl(c);
  });
}

}  // namespace

Catalog::Catalog(std::vector<Item> items) : items_(std::move(items)) {
  std::set<std::string_view> seen;
  for (const auto& item : items_) {
    if (!is_lowercase_token(item.name)) {
      throw ValidationError("item name '" + item.name + "' is not a non-empty lowercase token");
    }
    if (!seen.insert(item.name).second) {
      throw ValidationError("duplicate item '" + item.name + "'");
    }
  }
  for (Split split : kAllSplits) {
    for (Tier tier : kAllTiers) {
      bool any = std::any_of(items_.begin(), items_.end(), [&](const Item& it) {
        return it.tier == tier && it.split == split;
      });
      if (!any) {
        throw ValidationError("empty bucket " + std::string(to_string(split)) + "-" +
                              std::string(to_string(tier)));
      }
    }
  }
}

std::vector<Item> Catalog::bucket(Tier tier, Split split) const {
  std::vector<Item> out;
  std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
               [&](const Item& it) { return it.tier == tier && it.split == split; });
  return out;
}

std::optional<Item> Catalog::find(std::string_view name) const {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [&](const Item& item) { return item.name == name; });
  if (it == items_.end()) return std::nullopt;
  return *it;
}

namespace {

Catalog build_default() {
  struct Bucket {
    Split split;
    Tier tier;
    std::vector<std::string> names;
  };
  const std::vector<Bucket> buckets = {
      {Split::Train, Tier::High,
       {"airport", "airship", "bike", "bicycle", "bus", "camera", "gold", "supercar",
        "refrigerator", "jewelry", "hotel", "horse", "guitar", "tank"}},
      {Split::Train, Tier::Low,
       {"baseball", "bread", "brush", "chair", "chocolate", "vegetable", "soup", "shirt",
        "orange", "knife", "fish", "cookie", "cigarette", "honey", "newspaper"}},
      {Split::Dev, Tier::High, {"watch", "ipad", "phone", "tv", "telescope"}},
      {Split::Dev, Tier::Low, {"egg", "apple", "soda", "toothbrush", "toothpaste"}},
      {Split::Test, Tier::High, {"car", "house", "diamond", "airplane", "computer"}},
      {Split::Test, Tier::Low, {"pen", "paper", "water", "slipper", "sock"}},
  };
  std::vector<Item> items;
  for (const auto& b : buckets) {
    for (const auto& name : b.names) items.push_back(Item{name, b.tier, b.split});
  }
  return Catalog(std::move(items));
}

}  // namespace

const Catalog& default_catalog() {
  static const Catalog catalog = build_default();
  return catalog;
}

Catalog load_catalog(std::string_view document) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("catalog document must be a JSON object");

  // Sections are read in file order so item order survives a round trip.
  std::vector<Item> items;
  for (const auto& [split_label, section] : doc.items()) {
    Split split = parse_split(split_label);
    if (!section.is_object()) {
      throw ParseError("split section '" + split_label + "' must be an object");
    }
    for (const auto& [tier_label, names] : section.items()) {
      Tier tier = parse_tier(tier_label);
      if (!names.is_array()) {
        throw ParseError("'" + split_label + "." + tier_label + "' must be an array of strings");
      }
      for (const auto& name : names) {
        if (!name.is_string()) {
          throw ParseError("'" + split_label + "." + tier_label + "' must hold only strings");
        }
        items.push_back(Item{name.get<std::string>(), tier, split});
      }
    }
  }
  return Catalog(std::move(items));
}

std::string dump_catalog(const Catalog& catalog) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (Split split : kAllSplits) {
    auto& section = doc[std::string(to_string(split))];
    for (Tier tier : kAllTiers) {
      auto& names = section[std::string(to_string(tier))] = nlohmann::ordered_json::array();
      for (const auto& item : catalog.bucket(tier, split)) names.push_back(item.name);
    }
  }
  return doc.dump(2) + "\n";
}

std::vector<ItemPair> pairs(const Catalog& catalog, Split split) {
  const auto highs = catalog.bucket(Tier::High, split);
  const auto lows = catalog.bucket(Tier::Low, split);
  std::vector<ItemPair> out;
  out.reserve(highs.size() * lows.size());
  for (const auto& h : highs) {
    for (const auto& l : lows) out.push_back({h, l});
  }
  return out;
}

}  // namespace betbench
