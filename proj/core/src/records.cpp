#include "betbench/records.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "betbench/errors.hpp"
#include "betbench/stats.hpp"

namespace betbench {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_line(std::string_view line, std::string_view what) {
  try {
    ojson doc = ojson::parse(line);
    if (!doc.is_object()) throw ParseError(std::string(what) + " line is not a JSON object");
    return doc;
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError(std::string(what) + " line is not valid JSON: \"" + std::string(line) + "\"");
  }
}

template <typename T>
T field(const ojson& doc, const char* key, std::string_view line) {
  if (!doc.contains(key)) {
    throw ParseError("missing field '" + std::string(key) + "' in \"" + std::string(line) + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("field '" + std::string(key) + "' has the wrong type in \"" +
                     std::string(line) + "\"");
  }
}

ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

double number_or_nan(const ojson& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::numeric_limits<double>::quiet_NaN();
  return doc.at(key).get<double>();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

}  // namespace

std::string encode_record(const DatasetRecord& record) {
  const MCQAInstance& inst = record.instance;
  ojson doc;
  doc["id"] = inst.id;
  if (inst.is_bet()) {
    const auto& b = inst.bet();
    doc["kind"] = "bet";
    doc["modality"] = to_string(b.modality);
    doc["high"] = b.high;
    doc["low"] = b.low;
    doc["win_outcome"] = b.variant.win_outcome;
    doc["win_tier"] = to_string(b.variant.win_tier);
  } else {
    const auto& v = inst.value();
    doc["kind"] = "value";
    doc["template"] = to_string(v.kind);
    doc["high"] = v.high;
    doc["low"] = v.low;
  }
  doc["split"] = to_string(inst.split);
  doc["prompt"] = inst.prompt;
  doc["choices"] = inst.choices;
  if (inst.shuffled()) doc["permutation"] = inst.permutation;
  doc["standard_gt"] = record.standard_gt;
  ojson gt = ojson::object();
  for (const auto& [kind, set] : record.subset_gt) gt[std::string(to_string(kind))] = set.masks();
  doc["gt"] = std::move(gt);
  if (record.positive_applicable) doc["positive_applicable"] = *record.positive_applicable;
  return doc.dump();
}

namespace {

DatasetRecord decode_record_fields(std::string_view line) {
  const ojson doc = parse_line(line, "dataset");
  DatasetRecord record;
  MCQAInstance& inst = record.instance;

  const auto kind = field<std::string>(doc, "kind", line);
  const auto high = field<std::string>(doc, "high", line);
  const auto low = field<std::string>(doc, "low", line);
  if (kind == "bet") {
    BetVariant variant{field<int>(doc, "win_outcome", line),
                       parse_tier(field<std::string>(doc, "win_tier", line))};
    if (variant.win_outcome != 0 && variant.win_outcome != 1) {
      throw ParseError("win_outcome must be 0 or 1 in \"" + std::string(line) + "\"");
    }
    inst.kind = BetQuestion{parse_modality(field<std::string>(doc, "modality", line)), high, low,
                            variant};
  } else if (kind == "value") {
    inst.kind =
        ValueQuestion{parse_value_template(field<std::string>(doc, "template", line)), high, low};
  } else {
    throw ParseError("unknown record kind '" + kind + "'");
  }
  inst.id = field<std::string>(doc, "id", line);
  if (inst.id != instance_id(inst.kind)) {
    throw ParseError("record id '" + inst.id + "' does not match its kind fields");
  }
  inst.split = parse_split(field<std::string>(doc, "split", line));
  inst.prompt = field<std::string>(doc, "prompt", line);
  const auto choices = field<std::vector<std::string>>(doc, "choices", line);
  if (choices.size() != 3) throw ParseError("record '" + inst.id + "' must have 3 choices");
  std::copy(choices.begin(), choices.end(), inst.choices.begin());
  if (doc.contains("permutation")) {
    const auto perm = field<std::vector<int>>(doc, "permutation", line);
    if (perm.size() != 3) throw ParseError("record '" + inst.id + "' has a bad permutation");
    std::copy(perm.begin(), perm.end(), inst.permutation.begin());
    std::array<int, 3> sorted = inst.permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != kIdentityPermutation) {
      throw ParseError("record '" + inst.id + "' has a bad permutation");
    }
  }

  record.standard_gt = field<int>(doc, "standard_gt", line);
  if (record.standard_gt < 0 || record.standard_gt > 2) {
    throw ParseError("record '" + inst.id + "' has standard_gt out of range");
  }
  if (!doc.contains("gt") || !doc["gt"].is_object()) {
    throw ParseError("record '" + inst.id + "' has no gt object");
  }
  for (const auto& [label, masks] : doc["gt"].items()) {
    SubsetSet set;
    for (const auto& m : masks) {
      const int mask = m.get<int>();
      if (mask < 0 || mask > 7) throw ParseError("record '" + inst.id + "' has a bad subset mask");
      set.insert(PredictionSubset(static_cast<std::uint8_t>(mask)));
    }
    record.subset_gt[parse_gt_kind(label)] = set;
  }
  if (doc.contains("positive_applicable")) {
    record.positive_applicable = field<bool>(doc, "positive_applicable", line);
  }
  return record;
}

}  // namespace

DatasetRecord decode_record(std::string_view line) {
  try {
    return decode_record_fields(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed dataset record: ") + e.what());
  }
}

std::string encode_score(const ScoreRecord& score) {
  ojson doc;
  doc["id"] = score.id;
  doc["raw"] = score.raw;
  doc["normalized"] = score.normalized;
  return doc.dump();
}

ScoreRecord decode_score(std::string_view line) {
  const ojson doc = parse_line(line, "score");
  ScoreRecord s;
  s.id = field<std::string>(doc, "id", line);
  const auto raw = field<std::vector<double>>(doc, "raw", line);
  const auto normalized = field<std::vector<double>>(doc, "normalized", line);
  if (raw.size() != 3 || normalized.size() != 3) {
    throw ParseError("score '" + s.id + "' must hold 3 values");
  }
  std::copy(raw.begin(), raw.end(), s.raw.begin());
  std::copy(normalized.begin(), normalized.end(), s.normalized.begin());
  return s;
}

std::string encode_belief(const std::string& high, const std::string& low, Belief belief) {
  ojson doc;
  doc["high"] = high;
  doc["low"] = low;
  doc["belief"] = to_string(belief);
  return doc.dump();
}

std::string encode_summary(const EvalSummary& s) {
  ojson doc;
  doc["scorer"] = s.scorer;
  doc["dataset"] = s.dataset;
  doc["method"] = to_string(s.method);
  doc["metric"] = s.metric;
  doc["threshold"] = s.threshold ? ojson(*s.threshold) : ojson(nullptr);
  doc["dev"] = s.dev_dataset.empty() ? ojson(nullptr) : ojson(s.dev_dataset);
  doc["n_total"] = s.n_total;
  doc["n_excluded"] = s.n_excluded;
  doc["n_correct"] = s.n_correct;
  doc["accuracy"] = number_or_null(s.accuracy());
  doc["baseline"] = to_string(s.baseline);
  doc["z"] = number_or_null(s.z);
  doc["p"] = number_or_null(s.p_value);
  doc["p_display"] = std::isfinite(s.p_value) ? format_p(s.p_value) : "n/a";
  return doc.dump();
}

EvalSummary decode_summary(std::string_view line) {
  const ojson doc = parse_line(line, "report");
  EvalSummary s;
  s.scorer = field<std::string>(doc, "scorer", line);
  s.dataset = field<std::string>(doc, "dataset", line);
  s.method = parse_method(field<std::string>(doc, "method", line));
  s.metric = field<std::string>(doc, "metric", line);
  if (doc.contains("threshold") && !doc["threshold"].is_null()) {
    s.threshold = doc["threshold"].get<double>();
  }
  if (doc.contains("dev") && !doc["dev"].is_null()) s.dev_dataset = doc["dev"].get<std::string>();
  s.n_total = field<int>(doc, "n_total", line);
  s.n_excluded = field<int>(doc, "n_excluded", line);
  s.n_correct = field<int>(doc, "n_correct", line);
  s.baseline = parse_rational(field<std::string>(doc, "baseline", line));
  s.z = number_or_nan(doc, "z");
  s.p_value = number_or_nan(doc, "p");
  return s;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

template <typename T, typename Decode>
std::vector<T> read_lines(const std::filesystem::path& path, Decode decode) {
  std::istringstream in(read_text(path));
  std::vector<T> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(decode(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

template <typename Range, typename Encode>
void write_lines(const std::filesystem::path& path, const Range& items, Encode encode) {
  std::string text;
  for (const auto& item : items) {
    text += encode(item);
    text += '\n';
  }
  write_text(path, text);
}

}  // namespace

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path) {
  return read_lines<DatasetRecord>(path, decode_record);
}

void write_dataset(const std::filesystem::path& path, std::span<const DatasetRecord> records) {
  write_lines(path, records, encode_record);
}

std::vector<ScoreRecord> read_scores(const std::filesystem::path& path) {
  return read_lines<ScoreRecord>(path, decode_score);
}

void write_scores(const std::filesystem::path& path, std::span<const ScoreRecord> scores) {
  write_lines(path, scores, encode_score);
}

BeliefTable read_beliefs(const std::filesystem::path& path) {
  BeliefTable table;
  read_lines<int>(path, [&](std::string_view line) {
    const ojson doc = parse_line(line, "belief");
    table.set(field<std::string>(doc, "high", line), field<std::string>(doc, "low", line),
              parse_belief(field<std::string>(doc, "belief", line)));
    return 0;
  });
  return table;
}

void write_beliefs(const std::filesystem::path& path, const BeliefTable& table) {
  write_lines(path, table.entries(), [](const auto& entry) {
    return encode_belief(entry.first.first, entry.first.second, entry.second);
  });
}

std::vector<EvalSummary> read_report(const std::filesystem::path& path) {
  return read_lines<EvalSummary>(path, decode_summary);
}

void write_report(const std::filesystem::path& path, std::span<const EvalSummary> rows) {
  write_lines(path, rows, encode_summary);
}

}  // namespace betbench
