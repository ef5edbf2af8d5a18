#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betbench/beliefs.hpp"
#include "betbench/dataset.hpp"

namespace betbench {

using Scores = std::array<double, 3>;

enum class NormalizationMode { RawLogit, AlreadyNormalized };

std::string_view to_string(NormalizationMode mode);  // "raw-logit", "already-normalized"
NormalizationMode parse_normalization_mode(std::string_view label);

double sigmoid(double x) noexcept;

/// RawLogit: elementwise sigmoid. AlreadyNormalized: identity after checking
/// each score lies in [0, 1] (ValidationError otherwise).
Scores normalize(const Scores& raw, NormalizationMode mode);

struct ScoreRecord {
  std::string id;
  Scores raw{};
  Scores normalized{};

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

/// Maps each prompt-choice pair of an instance to a raw score.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual std::string name() const = 0;
  virtual NormalizationMode mode() const { return NormalizationMode::RawLogit; }

  /// Raw scores in display order.
  virtual Scores score_raw(const DatasetRecord& record) = 0;

  /// Scores every record; the result is index-aligned with `records`.
  virtual std::vector<ScoreRecord> score_all(std::span<const DatasetRecord> records);

  ScoreRecord score(const DatasetRecord& record);
};

/// Raw score per choice from a stable hash of (seed, id, canonical choice index),
/// uniform on (-4, 4). No shared RNG stream.
class RandomScorer final : public Scorer {
 public:
  explicit RandomScorer(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override;
  Scores score_raw(const DatasetRecord& record) override;

 private:
  std::uint64_t seed_;
};

/// +10 on the embedded standard ground truth, -10 elsewhere (inverted: the reverse).
class OracleScorer final : public Scorer {
 public:
  explicit OracleScorer(bool inverted = false) : inverted_(inverted) {}
  std::string name() const override { return inverted_ ? "inverse-oracle" : "oracle"; }
  Scores score_raw(const DatasetRecord& record) override;

 private:
  bool inverted_;
};

class ConstantScorer final : public Scorer {
 public:
  explicit ConstantScorer(double value) : value_(value) {}
  std::string name() const override;
  Scores score_raw(const DatasetRecord&) override { return {value_, value_, value_}; }

 private:
  double value_;
};

/// Answers value questions with the recorded belief and bet questions
/// rationally under it (+10 on the chosen choice, -10 elsewhere).
class BeliefTableScorer final : public Scorer {
 public:
  explicit BeliefTableScorer(BeliefTable table) : table_(std::move(table)) {}
  std::string name() const override { return "belief-table"; }
  Scores score_raw(const DatasetRecord& record) override;

 private:
  BeliefTable table_;
};

/// Parsed form of "builtin:NAME[=ARG]" or "exec:COMMAND".
struct ScorerSpec {
  enum class Type { Builtin, External };
  Type type = Type::Builtin;
  std::string name;     // builtin name, or the command line
  std::string argument;  // e.g. constant value
  NormalizationMode mode = NormalizationMode::RawLogit;
};

ScorerSpec parse_scorer_spec(std::string_view text);

struct ScorerOptions {
  std::uint64_t seed = 0;
  const BeliefTable* belief_table = nullptr;
  NormalizationMode external_mode = NormalizationMode::RawLogit;
  int workers = 1;
  int timeout_ms = 60'000;
};

std::unique_ptr<Scorer> make_scorer(const ScorerSpec& spec, const ScorerOptions& options);

}  // namespace betbench
