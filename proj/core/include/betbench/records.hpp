#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betbench/beliefs.hpp"
#include "betbench/dataset.hpp"
#include "betbench/metrics.hpp"
#include "betbench/scoring.hpp"

namespace betbench {

// Line-delimited JSON records. Each encode_* returns one line without the
// trailing newline; decode_* throws ParseError quoting the offending line.

std::string encode_record(const DatasetRecord& record);
DatasetRecord decode_record(std::string_view line);

std::string encode_score(const ScoreRecord& score);
ScoreRecord decode_score(std::string_view line);

std::string encode_belief(const std::string& high, const std::string& low, Belief belief);
std::string encode_summary(const EvalSummary& summary);
EvalSummary decode_summary(std::string_view line);

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path, std::span<const DatasetRecord> records);

std::vector<ScoreRecord> read_scores(const std::filesystem::path& path);
void write_scores(const std::filesystem::path& path, std::span<const ScoreRecord> scores);

BeliefTable read_beliefs(const std::filesystem::path& path);
void write_beliefs(const std::filesystem::path& path, const BeliefTable& table);

std::vector<EvalSummary> read_report(const std::filesystem::path& path);
void write_report(const std::filesystem::path& path, std::span<const EvalSummary> rows);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace betbench
