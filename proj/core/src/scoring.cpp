#include "betbench/scoring.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "betbench/errors.hpp"
#include "betbench/external_scorer.hpp"
#include "betbench/hash.hpp"
#include "betbench/metrics.hpp"

namespace betbench {

std::string_view to_string(NormalizationMode mode) {
  return mode == NormalizationMode::RawLogit ? "raw-logit" : "already-normalized";
}

NormalizationMode parse_normalization_mode(std::string_view label) {
  if (label == "raw-logit") return NormalizationMode::RawLogit;
  if (label == "already-normalized") return NormalizationMode::AlreadyNormalized;
  throw ParseError("unknown normalization mode '" + std::string(label) + "'");
}

double sigmoid(double x) noexcept {
  // Split by sign so exp never overflows.
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Scores normalize(const Scores& raw, NormalizationMode mode) {
  Scores out{};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (mode == NormalizationMode::RawLogit) {
      out[i] = sigmoid(raw[i]);
    } else {
      if (!(raw[i] >= 0.0 && raw[i] <= 1.0)) {
        std::ostringstream os;
        os << "score " << raw[i] << " at choice " << i
           << " is outside [0, 1] but the scorer declared already-normalized output";
        throw ValidationError(os.str());
      }
      out[i] = raw[i];
    }
  }
  return out;
}

ScoreRecord Scorer::score(const DatasetRecord& record) {
  ScoreRecord out;
  out.id = record.id();
  out.raw = score_raw(record);
  try {
    out.normalized = normalize(out.raw, mode());
  } catch (const ValidationError& e) {
    throw ValidationError("instance '" + record.id() + "': " + e.what());
  }
  return out;
}

std::vector<ScoreRecord> Scorer::score_all(std::span<const DatasetRecord> records) {
  std::vector<ScoreRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(score(r));
  return out;
}

std::string RandomScorer::name() const { return "random(seed=" + std::to_string(seed_) + ")"; }

Scores RandomScorer::score_raw(const DatasetRecord& record) {
  const auto& inst = record.instance;
  const std::uint64_t base = hash_combine(splitmix64(seed_), fnv1a64(inst.id));
  Scores raw{};
  for (int pos = 0; pos < 3; ++pos) {
    const std::uint64_t h =
        hash_combine(base, static_cast<std::uint64_t>(inst.canonical_index(pos)));
    raw[static_cast<std::size_t>(pos)] = 8.0 * unit_interval(h) - 4.0;
  }
  return raw;
}

namespace {

Scores one_hot(int chosen, double on, double off) {
  Scores raw{off, off, off};
  raw.at(static_cast<std::size_t>(chosen)) = on;
  return raw;
}

}  // namespace

Scores OracleScorer::score_raw(const DatasetRecord& record) {
  return inverted_ ? one_hot(record.standard_gt, -10.0, 10.0)
                   : one_hot(record.standard_gt, 10.0, -10.0);
}

std::string ConstantScorer::name() const {
  std::ostringstream os;
  os << "constant(" << value_ << ")";
  return os.str();
}

Scores BeliefTableScorer::score_raw(const DatasetRecord& record) {
  const auto& inst = record.instance;
  const Belief belief = table_.at(inst.high_item(), inst.low_item());
  if (inst.is_bet()) return one_hot(bca_gt(inst, belief), 10.0, -10.0);
  const int canonical = belief == Belief::HGreater ? 0 : belief == Belief::LGreater ? 1 : 2;
  return one_hot(inst.display_position(canonical), 10.0, -10.0);
}

ScorerSpec parse_scorer_spec(std::string_view text) {
  ScorerSpec spec;
  if (text.starts_with("exec:")) {
    spec.type = ScorerSpec::Type::External;
    spec.name = std::string(text.substr(5));
    if (spec.name.empty()) throw ParseError("exec scorer needs a command line");
    return spec;
  }
  if (!text.starts_with("builtin:")) {
    throw ParseError("scorer must be builtin:NAME or exec:COMMAND, got '" + std::string(text) +
                     "'");
  }
  std::string_view rest = text.substr(8);
  if (auto eq = rest.find('='); eq != std::string_view::npos) {
    spec.argument = std::string(rest.substr(eq + 1));
    rest = rest.substr(0, eq);
  }
  spec.name = std::string(rest);
  static const std::array<std::string_view, 5> kBuiltins{"random", "oracle", "inverse-oracle",
                                                         "constant", "belief-table"};
  if (std::find(kBuiltins.begin(), kBuiltins.end(), spec.name) == kBuiltins.end()) {
    throw ParseError("unknown builtin scorer '" + spec.name + "'");
  }
  return spec;
}

std::unique_ptr<Scorer> make_scorer(const ScorerSpec& spec, const ScorerOptions& options) {
  if (spec.type == ScorerSpec::Type::External) {
    return std::make_unique<ExternalScorer>(spec.name, options.external_mode, options.workers,
                                            std::chrono::milliseconds(options.timeout_ms));
  }
  if (spec.name == "random") {
    std::uint64_t seed = options.seed;
    if (!spec.argument.empty()) seed = std::stoull(spec.argument);
    return std::make_unique<RandomScorer>(seed);
  }
  if (spec.name == "oracle") return std::make_unique<OracleScorer>(false);
  if (spec.name == "inverse-oracle") return std::make_unique<OracleScorer>(true);
  if (spec.name == "constant") {
    double value = 0.0;
    if (!spec.argument.empty()) {
      try {
        value = std::stod(spec.argument);
      } catch (const std::exception&) {
        throw ParseError("constant scorer argument '" + spec.argument + "' is not a number");
      }
    }
    return std::make_unique<ConstantScorer>(value);
  }
  if (spec.name == "belief-table") {
    if (options.belief_table == nullptr) {
      throw ValidationError("builtin:belief-table needs a belief table");
    }
    return std::make_unique<BeliefTableScorer>(*options.belief_table);
  }
  throw ParseError("unknown builtin scorer '" + spec.name + "'");
}

}  // namespace betbench
