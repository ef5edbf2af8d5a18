#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betbench/scoring.hpp"

namespace betbench {

/// A child process running `/bin/sh -c command`, talking over its stdin/stdout.
class ChildProcess {
 public:
  explicit ChildProcess(const std::string& command);
  ~ChildProcess();
  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  void write_line(const std::string& line);
  /// nullopt on EOF; throws ProtocolError on timeout.
  std::optional<std::string> read_line(std::chrono::milliseconds timeout);

 private:
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

/// Line protocol, one request in flight per connection:
///   -> {"id": "...", "pairs": [p0, p1, p2]}
///   <- {"id": "...", "raw": [r0, r1, r2]}
/// Any malformed or mismatched reply aborts with the offending line quoted.
std::string encode_request(const MCQAInstance& instance);
Scores decode_response(const std::string& line, const std::string& expected_id);

class ExternalScorer final : public Scorer {
 public:
  ExternalScorer(std::string command, NormalizationMode mode, int workers = 1,
                 std::chrono::milliseconds timeout = std::chrono::seconds(60));
  ~ExternalScorer() override;

  std::string name() const override { return "exec:" + command_; }
  NormalizationMode mode() const override { return mode_; }
  Scores score_raw(const DatasetRecord& record) override;
  std::vector<ScoreRecord> score_all(std::span<const DatasetRecord> records) override;

 private:
  Scores exchange(ChildProcess& child, const DatasetRecord& record);

  std::string command_;
  NormalizationMode mode_;
  int workers_;
  std::chrono::milliseconds timeout_;
  std::unique_ptr<ChildProcess> single_;  // lazily started for score_raw
};

}  // namespace betbench
