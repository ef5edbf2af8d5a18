#pragma once

#include <optional>
#include <span>
#include <string>

#include "betbench/dataset.hpp"
#include "betbench/gain.hpp"
#include "betbench/oracle.hpp"

namespace betbench {

/// Standard-error form of the one-sided proportion z-test.
enum class StdErrForm {
  SampleBessel,  // sqrt(p(1-p)/(n-1)); the default
  Sample,        // sqrt(p(1-p)/n)
  Null,          // sqrt(p0(1-p0)/n)
};

struct TestResult {
  int k = 0;
  int n = 0;
  Rational p0{0};
  double z = 0.0;
  double p = 1.0;
};

double normal_cdf(double x) noexcept;

/// One-sided test of H1: proportion > p0. A perfect score reports p = 0, a
/// zero score p = 1. Requires 0 <= k <= n, n >= 2, 0 < p0 < 1.
TestResult ztest(int k, int n, Rational p0, StdErrForm form = StdErrForm::SampleBessel);

/// "<.001", "1.00", or three decimals with a leading period (".026").
std::string format_p(double p);

/// Expected accuracy of a uniform random selector: 1/3 for the standard
/// method; for a threshold ground truth the mean over included records of
/// |correct subsets| / 8 (PositiveGain skips non-applicable records).
Rational random_baseline(std::optional<GtKind> kind, std::span<const DatasetRecord> records);

}  // namespace betbench
