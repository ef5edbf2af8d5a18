// Randomized properties. Each case draws its inputs from a fixed-seed Gen so
// failures reproduce; CAPTURE the iteration to find the failing draw.
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "betbench/errors.hpp"
#include "betbench/metrics.hpp"
#include "betbench/predict.hpp"
#include "betbench/records.hpp"
#include "test_support.hpp"

using namespace betbench;

namespace {

constexpr int kIterations = 300;

std::string random_name(testing::Gen& gen) {
  std::string s;
  const int len = gen.integer(1, 8);
  for (int i = 0; i < len; ++i) s += static_cast<char>('a' + gen.integer(0, 25));
  return s;
}

Catalog random_catalog(testing::Gen& gen) {
  std::set<std::string> used;
  std::vector<Item> items;
  for (Split split : kAllSplits) {
    for (Tier tier : kAllTiers) {
      const int count = gen.integer(1, 6);
      for (int i = 0; i < count;) {
        std::string name = random_name(gen);
        if (!used.insert(name).second) continue;
        items.push_back({name, tier, split});
        ++i;
      }
    }
  }
  // interleave buckets to make sure order within a bucket is what matters
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[static_cast<std::size_t>(gen.integer(0, static_cast<int>(i) - 1))]);
  }
  return Catalog(items);
}

BetVariant random_variant(testing::Gen& gen) {
  return kAllBetVariants[static_cast<std::size_t>(gen.integer(0, 3))];
}

}  // namespace

TEST_CASE("property: pairs size and uniqueness on random catalogs") {
  testing::Gen gen(11);
  for (int it = 0; it < kIterations; ++it) {
    CAPTURE(it);
    const Catalog c = random_catalog(gen);
    const Catalog back = load_catalog(dump_catalog(c));
    for (Split split : kAllSplits) {
      for (Tier tier : kAllTiers) CHECK(back.bucket(tier, split) == c.bucket(tier, split));
    }
    CHECK(dump_catalog(back) == dump_catalog(c));
    for (Split split : kAllSplits) {
      const auto ps = pairs(c, split);
      CHECK(ps.size() == c.bucket(Tier::High, split).size() * c.bucket(Tier::Low, split).size());
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& p : ps) seen.insert({p.high.name, p.low.name});
      CHECK(seen.size() == ps.size());
    }
  }
}

TEST_CASE("property: generated bet datasets on random catalogs") {
  testing::Gen gen(12);
  for (int it = 0; it < 60; ++it) {
    CAPTURE(it);
    const Catalog c = random_catalog(gen);
    const auto split = kAllSplits[static_cast<std::size_t>(gen.integer(0, 2))];
    const auto modality = kAllModalities[static_cast<std::size_t>(gen.integer(0, 2))];
    GenerateOptions opts{gen.coin(), gen.u64()};
    const auto records = annotate_all(generate(c, split, {modality}, opts));
    CHECK(records.size() == 4 * pairs(c, split).size());

    int high = 0;
    int excluded = 0;
    std::set<std::string> ids;
    for (const auto& r : records) {
      ids.insert(r.id());
      const auto& v = r.instance.bet().variant;
      if (v.win_tier == Tier::High) ++high;
      if (!*r.positive_applicable) ++excluded;
      CHECK(r.gt(GtKind::Strict).size() == 1);
      CHECK(r.gt(GtKind::PositiveGain).size() == (v.win_tier == Tier::High ? 2 : 0));
      CHECK(r.gt(GtKind::NonNegativeGain).size() == (v.win_tier == Tier::High ? 3 : 1));
      CHECK(r.gt(GtKind::Strict).contains(PredictionSubset::of({r.standard_gt})));
      for (int pos = 0; pos < 3; ++pos) {
        CHECK(r.instance.pair(pos) == r.instance.prompt + " " + r.instance.choices[pos]);
      }
      CHECK(decode_record(encode_record(r)) == r);
    }
    CHECK(ids.size() == records.size());
    CHECK(2 * high == static_cast<int>(records.size()));
    CHECK(excluded == static_cast<int>(records.size()) - high);
  }
}

TEST_CASE("property: the standard answer strictly beats every other choice") {
  for (const auto& v : kAllBetVariants) {
    const int best = standard_gt_canonical(v);
    const GainExpr g = role_gain(role_of(best, v), v);
    for (int other = 0; other < 3; ++other) {
      if (other == best) continue;
      CHECK(sign_of(g - role_gain(role_of(other, v), v)) == Sign::Positive);
    }
  }
}

TEST_CASE("property: split-wager gain is the average of the two bets") {
  testing::Gen gen(13);
  for (int it = 0; it < kIterations; ++it) {
    const auto v = random_variant(gen);
    const auto p = gen.wager_point();
    const auto both = std::get<GainExpr>(subset_gain(PredictionSubset::of({0, 1}), v));
    const Rational avg = (role_gain(BetRole::BetWin, v).evaluate(p) +
                          role_gain(BetRole::BetLose, v).evaluate(p)) /
                         2;
    CHECK(both.evaluate(p) == avg);
  }
}

TEST_CASE("property: threshold predict is antitone in theta") {
  testing::Gen gen(14);
  for (int it = 0; it < kIterations; ++it) {
    const Scores s = gen.scores();
    double a = gen.real(0, 1);
    double b = gen.real(0, 1);
    if (a > b) std::swap(a, b);
    const auto lo = threshold_predict(s, Threshold(a));
    const auto hi = threshold_predict(s, Threshold(b));
    CHECK((hi.mask() & ~lo.mask()) == 0);
  }
}

TEST_CASE("property: argmax survives normalization") {
  testing::Gen gen(15);
  for (int it = 0; it < kIterations; ++it) {
    Scores raw{gen.real(-30, 30), gen.real(-30, 30), gen.real(-30, 30)};
    if (gen.integer(0, 4) == 0) raw[2] = raw[0];  // exercise ties
    CHECK(standard_predict(normalize(raw, NormalizationMode::RawLogit)) == standard_predict(raw));
  }
}

TEST_CASE("property: grid search is deterministic and bracketed by its maximizers") {
  testing::Gen gen(16);
  for (int it = 0; it < 100; ++it) {
    CAPTURE(it);
    std::vector<CalibrationExample> dev;
    const int n = gen.integer(1, 30);
    for (int i = 0; i < n; ++i) {
      SubsetSet correct;
      correct.insert(PredictionSubset(static_cast<std::uint8_t>(gen.integer(0, 7))));
      if (gen.coin()) correct.insert(PredictionSubset(static_cast<std::uint8_t>(gen.integer(0, 7))));
      dev.push_back({gen.scores(), correct});
    }
    const auto a = grid_search(dev);
    const auto b = grid_search(dev);
    CHECK(a.threshold == b.threshold);
    CHECK(a.maximizers == b.maximizers);
    REQUIRE_FALSE(a.maximizers.empty());
    CHECK(std::is_sorted(a.maximizers.begin(), a.maximizers.end()));
    CHECK(a.threshold.value() >= a.maximizers.front() / 100.0 - 1e-12);
    CHECK(a.threshold.value() <= a.maximizers.back() / 100.0 + 1e-12);

    // brute-force accuracy at every grid point
    int best = -1;
    std::vector<int> argmax;
    for (int k = 0; k <= 100; ++k) {
      int correct = 0;
      for (const auto& e : dev) {
        if (e.correct.contains(threshold_predict(e.normalized, Threshold(k / 100.0)))) ++correct;
      }
      if (correct > best) {
        best = correct;
        argmax.clear();
      }
      if (correct == best) argmax.push_back(k);
    }
    CHECK(a.best_correct == best);
    CHECK(a.maximizers == argmax);
    const std::size_t m = argmax.size();
    const double median = m % 2 ? argmax[m / 2] / 100.0
                                : (argmax[m / 2 - 1] / 100.0 + argmax[m / 2] / 100.0) / 2;
    CHECK(a.threshold.value() == doctest::Approx(median).epsilon(1e-12));
  }
}

TEST_CASE("property: oracle scorer is perfect on shuffled datasets") {
  testing::Gen gen(17);
  OracleScorer oracle;
  for (int it = 0; it < 20; ++it) {
    const auto modality = kAllModalities[static_cast<std::size_t>(gen.integer(0, 2))];
    const auto records = testing::bet_dataset(modality, Split::Test, {true, gen.u64()});
    const auto acc = accuracy_standard(predict_standard(oracle.score_all(records)), records);
    CHECK(acc.n_correct == static_cast<int>(records.size()));
    const auto strict = accuracy_threshold(predict_threshold(oracle.score_all(records), 0.5),
                                           records, GtKind::Strict);
    CHECK(strict.n_correct == static_cast<int>(records.size()));
  }
}

TEST_CASE("property: flipping a belief swaps the rational answer") {
  testing::Gen gen(18);
  const auto records = testing::bet_dataset(BetModality::Card, Split::Train, {true, 77});
  for (int it = 0; it < kIterations; ++it) {
    const auto& r = records[static_cast<std::size_t>(gen.integer(0, static_cast<int>(records.size()) - 1))];
    const auto& inst = r.instance;
    BetVariant swapped = inst.bet().variant;
    swapped.win_tier = swapped.win_tier == Tier::High ? Tier::Low : Tier::High;
    CHECK(bca_gt(inst, Belief::HGreater) == r.standard_gt);
    CHECK(bca_gt(inst, Belief::LGreater) == inst.display_position(standard_gt_canonical(swapped)));
    CHECK(bca_gt(inst, Belief::HGreater) != bca_gt(inst, Belief::LGreater));
  }
}

TEST_CASE("property: uniform h-greater beliefs make bca equal accuracy") {
  testing::Gen gen(19);
  const auto records = testing::bet_dataset(BetModality::Coin);
  BeliefTable table;
  for (const auto& p : pairs(default_catalog(), Split::Test)) {
    table.set(p.high.name, p.low.name, Belief::HGreater);
  }
  for (int it = 0; it < 50; ++it) {
    RandomScorer scorer(gen.u64());
    const auto preds = predict_standard(scorer.score_all(records));
    CHECK(bca(preds, records, table).n_correct == accuracy_standard(preds, records).n_correct);
  }
}
