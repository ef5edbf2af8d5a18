#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace betbench {

using Rational = boost::rational<std::int64_t>;

// boost::rational's mixed rational/integer equality recurses under C++20
// rewritten-operator lookup, so compare through the numerator instead.
inline int signum(const Rational& r) { return (r.numerator() > 0) - (r.numerator() < 0); }

/// A point (H, L, X): high-item value, low-item value, wager.
struct WagerPoint {
  Rational high;
  Rational low;
  Rational wager;
};

/// Strict interior of the wager region: 0 < L < X < (H - L) / 2.
bool in_wager_region(const WagerPoint& point);

/// Interior sample points used for sign analysis.
const std::array<WagerPoint, 5>& canonical_wager_samples();

/// coef_h*H + coef_l*L + coef_x*X with exact rational coefficients.
struct GainExpr {
  Rational coef_h{0};
  Rational coef_l{0};
  Rational coef_x{0};

  static GainExpr zero() { return {}; }

  bool is_zero() const {
    return signum(coef_h) == 0 && signum(coef_l) == 0 && signum(coef_x) == 0;
  }
  Rational evaluate(const WagerPoint& point) const;

  GainExpr operator-() const { return {-coef_h, -coef_l, -coef_x}; }
  friend GainExpr operator+(const GainExpr& a, const GainExpr& b) {
    return {a.coef_h + b.coef_h, a.coef_l + b.coef_l, a.coef_x + b.coef_x};
  }
  friend GainExpr operator-(const GainExpr& a, const GainExpr& b) { return a + (-b); }
  friend GainExpr operator*(const Rational& k, const GainExpr& e) {
    return {k * e.coef_h, k * e.coef_l, k * e.coef_x};
  }
  friend bool operator==(const GainExpr&, const GainExpr&) = default;
};

/// e.g. "1/2*H - 1/2*X", "0".
std::string to_string(const GainExpr& expr);
std::string to_string(const Rational& value);

enum class Sign { Positive, Negative, Zero, Indeterminate };

std::string_view to_string(Sign sign);

/// Zero iff every coefficient is zero; otherwise the unanimous sign of the
/// expression over canonical_wager_samples(), or Indeterminate if the samples
/// disagree or any sample evaluates to exactly zero.
Sign sign_of(const GainExpr& expr);

/// sign_of, but throws OracleError on Indeterminate.
Sign determinate_sign(const GainExpr& expr);

}  // namespace betbench
