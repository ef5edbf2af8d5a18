#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "betbench/catalog.hpp"
#include "betbench/dataset.hpp"
#include "betbench/gain.hpp"
#include "betbench/scoring.hpp"
#include "betbench/templates.hpp"

namespace betbench::testing {

// Hand-rolled generator state; every property test seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::uint64_t u64() { return rng_(); }

  // Point strictly inside 0 < L < X < (H - L) / 2, built from small integers.
  WagerPoint wager_point() {
    const Rational low(integer(1, 50), integer(1, 10));
    const Rational gap(integer(1, 50), integer(1, 10));
    const Rational wager = low + gap;
    const Rational slack(integer(1, 50), integer(1, 10));
    const Rational high = 2 * wager + low + slack;
    return {high, low, wager};
  }

  Scores scores() { return {real(0, 1), real(0, 1), real(0, 1)}; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<DatasetRecord> bet_dataset(BetModality modality, Split split = Split::Test,
                                              const GenerateOptions& options = {}) {
  return annotate_all(generate(default_catalog(), split, DatasetSpec{modality}, options));
}

inline std::vector<DatasetRecord> value_dataset(ValueTemplate kind, Split split = Split::Test,
                                                const GenerateOptions& options = {}) {
  return annotate_all(generate(default_catalog(), split, DatasetSpec{kind}, options));
}

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("betbench-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace betbench::testing
