#include "betbench/stats.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "betbench/errors.hpp"

namespace betbench {

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

TestResult ztest(int k, int n, Rational p0, StdErrForm form) {
  if (n < 2) throw ValidationError("z-test needs n >= 2, got " + std::to_string(n));
  if (k < 0 || k > n) throw ValidationError("z-test needs 0 <= k <= n");
  if (signum(p0) <= 0 || p0 >= Rational(1)) throw ValidationError("z-test needs 0 < p0 < 1");

  TestResult r{k, n, p0, 0.0, 1.0};
  const double phat = static_cast<double>(k) / n;
  const double null = boost::rational_cast<double>(p0);
  const bool uses_sample_variance = form != StdErrForm::Null;

  if (uses_sample_variance && k == n) {
    r.z = std::numeric_limits<double>::infinity();
    r.p = 0.0;
    return r;
  }
  if (uses_sample_variance && k == 0) {
    r.z = -std::numeric_limits<double>::infinity();
    r.p = 1.0;
    return r;
  }

  double variance = 0.0;
  switch (form) {
    case StdErrForm::SampleBessel: variance = phat * (1.0 - phat) / (n - 1); break;
    case StdErrForm::Sample: variance = phat * (1.0 - phat) / n; break;
    case StdErrForm::Null: variance = null * (1.0 - null) / n; break;
  }
  r.z = (phat - null) / std::sqrt(variance);
  r.p = 0.5 * std::erfc(r.z / std::sqrt(2.0));  // 1 - Phi(z) without cancellation
  return r;
}

std::string format_p(double p) {
  if (p < 0.001) return "<.001";
  if (p > 0.9995) return "1.00";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", p);
  std::string s(buf);
  return s.front() == '0' ? s.substr(1) : s;
}

Rational random_baseline(std::optional<GtKind> kind, std::span<const DatasetRecord> records) {
  if (records.empty()) throw ValidationError("random baseline of an empty dataset");
  if (!kind) return Rational(1, 3);

  std::int64_t correct = 0;
  std::int64_t included = 0;
  for (const auto& r : records) {
    if (*kind == GtKind::PositiveGain && !r.positive_applicable.value_or(false)) continue;
    correct += r.gt(*kind).size();
    ++included;
  }
  if (included == 0) {
    throw ValidationError("no records left after excluding non-applicable questions");
  }
  return Rational(correct, 8 * included);
}

}  // namespace betbench
