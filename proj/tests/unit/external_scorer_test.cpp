#include <doctest.h>

#include <chrono>
#include <cmath>
#include <string>

#include <json.hpp>

#include "betbench/errors.hpp"
#include "betbench/external_scorer.hpp"
#include "test_support.hpp"

using namespace betbench;
using namespace std::chrono_literals;

namespace {

std::string fake(const std::string& mode) { return std::string(BETBENCH_FAKE_SCORER) + " " + mode; }

std::string failure(ExternalScorer& scorer, const std::vector<DatasetRecord>& records) {
  try {
    scorer.score_all(records);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("request encoding") {
  const auto records = testing::bet_dataset(BetModality::Coin);
  const auto& inst = records.front().instance;
  const auto doc = nlohmann::json::parse(encode_request(inst));
  CHECK(doc["id"] == inst.id);
  REQUIRE(doc["pairs"].size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(doc["pairs"][i] == inst.pair(i));
}

TEST_CASE("response decoding") {
  CHECK(decode_response(R"({"id":"a","raw":[1,-2.5,3e2]})", "a") == Scores{1, -2.5, 300});
  CHECK_THROWS_AS(decode_response(R"({"id":"b","raw":[1,2,3]})", "a"), ProtocolError);
  CHECK_THROWS_AS(decode_response(R"({"id":"a","raw":[1,2]})", "a"), ProtocolError);
  CHECK_THROWS_AS(decode_response(R"({"id":"a","raw":[1,2,"x"]})", "a"), ProtocolError);
  CHECK_THROWS_AS(decode_response(R"({"id":"a"})", "a"), ProtocolError);
  CHECK_THROWS_AS(decode_response(R"([1,2,3])", "a"), ProtocolError);
  CHECK_THROWS_AS(decode_response("nope", "a"), ProtocolError);
  try {
    decode_response("nope", "bet-coin-car-pen-w0H");
  } catch (const ProtocolError& e) {
    const std::string what = e.what();
    CHECK(what.find("bet-coin-car-pen-w0H") != std::string::npos);
    CHECK(what.find("\"nope\"") != std::string::npos);
  }
}

TEST_CASE("echo scorer round trips") {
  const auto records = testing::bet_dataset(BetModality::Coin);
  ExternalScorer scorer(fake("length"), NormalizationMode::RawLogit, 1, 10s);
  const auto first = scorer.score_all(records);
  REQUIRE(first.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(first[i].id == records[i].id());
    for (int c = 0; c < 3; ++c) {
      const double expected = static_cast<double>(records[i].instance.pair(c).size()) / 10.0;
      CHECK(first[i].raw[c] == expected);
      CHECK(first[i].normalized[c] == sigmoid(expected));
    }
  }
  ExternalScorer again(fake("length"), NormalizationMode::RawLogit, 1, 10s);
  CHECK(again.score_all(records) == first);

  ExternalScorer parallel(fake("length"), NormalizationMode::RawLogit, 4, 10s);
  CHECK(parallel.score_all(records) == first);

  ExternalScorer single(fake("length"), NormalizationMode::RawLogit, 1, 10s);
  CHECK(single.score_raw(records[7]) == first[7].raw);
  CHECK(single.score_raw(records[8]) == first[8].raw);
}

TEST_CASE("already-normalized scores pass through") {
  const auto records = testing::value_dataset(ValueTemplate::ChoiceExpensive);
  ExternalScorer scorer(fake("unit"), NormalizationMode::AlreadyNormalized, 2, 10s);
  for (const auto& s : scorer.score_all(records)) CHECK(s.normalized == s.raw);
}

TEST_CASE("protocol violations abort with the instance id") {
  const auto records = testing::bet_dataset(BetModality::Card);
  const std::string first_id = records.front().id();

  ExternalScorer out_of_range(fake("out-of-range"), NormalizationMode::AlreadyNormalized, 1, 10s);
  auto msg = failure(out_of_range, records);
  CHECK(msg.find(first_id) != std::string::npos);

  // the same scores are fine as logits
  ExternalScorer as_logits(fake("out-of-range"), NormalizationMode::RawLogit, 1, 10s);
  CHECK(failure(as_logits, records).empty());

  for (const char* mode : {"wrong-id", "arity", "garbage", "string", "exit"}) {
    CAPTURE(mode);
    ExternalScorer bad(fake(mode), NormalizationMode::RawLogit, 1, 10s);
    msg = failure(bad, records);
    CHECK(msg.find(first_id) != std::string::npos);
  }

  ExternalScorer bad_line(fake("garbage"), NormalizationMode::RawLogit, 1, 10s);
  CHECK(failure(bad_line, records).find("this is not json") != std::string::npos);
}

TEST_CASE("a silent scorer times out") {
  const auto records = testing::bet_dataset(BetModality::Coin);
  ExternalScorer scorer(fake("silent"), NormalizationMode::RawLogit, 1, 200ms);
  const auto start = std::chrono::steady_clock::now();
  const auto msg = failure(scorer, records);
  CHECK(msg.find("timed out") != std::string::npos);
  CHECK(msg.find(records.front().id()) != std::string::npos);
  CHECK(std::chrono::steady_clock::now() - start < 10s);
}

TEST_CASE("parallel failures report the earliest instance") {
  const auto records = testing::bet_dataset(BetModality::Coin);
  ExternalScorer scorer(fake("wrong-id"), NormalizationMode::RawLogit, 4, 10s);
  CHECK(failure(scorer, records).find(records.front().id()) != std::string::npos);
}

TEST_CASE("missing command") {
  const auto records = testing::bet_dataset(BetModality::Coin);
  ExternalScorer scorer("/nonexistent/scorer-binary", NormalizationMode::RawLogit, 1, 5s);
  CHECK_FALSE(failure(scorer, records).empty());
}
