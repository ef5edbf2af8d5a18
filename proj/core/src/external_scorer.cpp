#include "betbench/external_scorer.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "betbench/errors.hpp"

namespace betbench {

namespace {

void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

std::string quoted(const std::string& line) {
  constexpr std::size_t kMax = 200;
  std::string shown = line.size() > kMax ? line.substr(0, kMax) + "..." : line;
  return "\"" + shown + "\"";
}

}  // namespace

ChildProcess::ChildProcess(const std::string& command) {
  ignore_sigpipe_once();
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw ProtocolError(std::string("pipe failed: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw ProtocolError(std::string("pipe failed: ") + std::strerror(errno));
  }
  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw ProtocolError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

ChildProcess::~ChildProcess() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ <= 0) return;
  int status = 0;
  for (int i = 0; i < 200; ++i) {
    if (::waitpid(pid_, &status, WNOHANG) == pid_) return;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, &status, 0);
}

void ChildProcess::write_line(const std::string& line) {
  std::string data = line + "\n";
  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    const ssize_t n = ::write(to_child_, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(std::string("scorer stdin closed: ") + std::strerror(errno));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

std::optional<std::string> ChildProcess::read_line(std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) throw ProtocolError("scorer timed out");
    pollfd pfd{from_child_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(std::string("poll failed: ") + std::strerror(errno));
    }
    if (ready == 0) throw ProtocolError("scorer timed out");
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) {
      if (buffer_.empty()) return std::nullopt;
      std::string line = std::move(buffer_);
      buffer_.clear();
      return line;
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::string encode_request(const MCQAInstance& instance) {
  nlohmann::ordered_json req;
  req["id"] = instance.id;
  req["pairs"] = {instance.pair(0), instance.pair(1), instance.pair(2)};
  return req.dump();
}

Scores decode_response(const std::string& line, const std::string& expected_id) {
  auto fail = [&](const std::string& why) -> ProtocolError {
    return ProtocolError("scorer protocol violation on instance '" + expected_id + "': " + why +
                         "; line: " + quoted(line));
  };
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw fail("reply is not JSON");
  }
  if (!doc.is_object()) throw fail("reply is not an object");
  if (!doc.contains("id") || !doc["id"].is_string()) throw fail("reply has no string id");
  if (doc["id"].get<std::string>() != expected_id) throw fail("reply id does not match request");
  if (!doc.contains("raw") || !doc["raw"].is_array()) throw fail("reply has no raw array");
  const auto& raw = doc["raw"];
  if (raw.size() != 3) throw fail("raw must hold exactly 3 scores");
  Scores out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!raw[i].is_number()) throw fail("raw score is not a number");
    out[i] = raw[i].get<double>();
    if (!std::isfinite(out[i])) throw fail("raw score is not finite");
  }
  return out;
}

ExternalScorer::ExternalScorer(std::string command, NormalizationMode mode, int workers,
                               std::chrono::milliseconds timeout)
    : command_(std::move(command)), mode_(mode), workers_(std::max(1, workers)),
      timeout_(timeout) {}

ExternalScorer::~ExternalScorer() = default;

Scores ExternalScorer::exchange(ChildProcess& child, const DatasetRecord& record) {
  try {
    child.write_line(encode_request(record.instance));
    auto line = child.read_line(timeout_);
    if (!line) throw ProtocolError("scorer exited before replying");
    return decode_response(*line, record.id());
  } catch (const ProtocolError& e) {
    const std::string what = e.what();
    if (what.find(record.id()) != std::string::npos) throw;
    throw ProtocolError("instance '" + record.id() + "': " + what);
  }
}

Scores ExternalScorer::score_raw(const DatasetRecord& record) {
  if (!single_) single_ = std::make_unique<ChildProcess>(command_);
  return exchange(*single_, record);
}

std::vector<ScoreRecord> ExternalScorer::score_all(std::span<const DatasetRecord> records) {
  const std::size_t n = records.size();
  std::vector<ScoreRecord> out(n);
  if (n == 0) return out;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(workers_), n);

  // Contiguous chunks per connection; each connection is strictly sequential.
  struct Failure {
    std::size_t index = 0;
    std::exception_ptr error;
  };
  std::vector<Failure> failures(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        std::size_t i = begin;
        try {
          ChildProcess child(command_);
          for (; i < end; ++i) {
            ScoreRecord rec;
            rec.id = records[i].id();
            rec.raw = exchange(child, records[i]);
            try {
              rec.normalized = normalize(rec.raw, mode_);
            } catch (const ValidationError& e) {
              throw ValidationError("instance '" + rec.id + "': " + e.what());
            }
            out[i] = std::move(rec);
          }
        } catch (...) {
          failures[w] = Failure{i, std::current_exception()};
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f.error) std::rethrow_exception(f.error);  // chunks are ordered, so first = lowest index
  }
  return out;
}

}  // namespace betbench
