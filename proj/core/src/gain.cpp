#include "betbench/gain.hpp"

#include <sstream>

#include "betbench/errors.hpp"

namespace betbench {

bool in_wager_region(const WagerPoint& p) {
  return signum(p.low) > 0 && p.low < p.wager && p.wager < (p.high - p.low) / 2;
}

const std::array<WagerPoint, 5>& canonical_wager_samples() {
  static const std::array<WagerPoint, 5> samples{{
      {Rational(10), Rational(1), Rational(3, 2)},
      {Rational(10), Rational(1), Rational(2)},
      {Rational(10), Rational(1), Rational(22, 5)},
      {Rational(100), Rational(1), Rational(40)},
      {Rational(16, 5), Rational(1), Rational(21, 20)},
  }};
  return samples;
}

Rational GainExpr::evaluate(const WagerPoint& p) const {
  return coef_h * p.high + coef_l * p.low + coef_x * p.wager;
}

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value.numerator();
  if (value.denominator() != 1) os << "/" << value.denominator();
  return os.str();
}

std::string to_string(const GainExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  auto term = [&](const Rational& c, const char* symbol) {
    if (signum(c) == 0) return;
    const bool negative = signum(c) < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != Rational(1)) out += to_string(magnitude) + "*";
    out += symbol;
  };
  term(expr.coef_h, "H");
  term(expr.coef_l, "L");
  term(expr.coef_x, "X");
  return out;
}

std::string_view to_string(Sign sign) {
  switch (sign) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Indeterminate: return "indeterminate";
  }
  return "?";
}

Sign sign_of(const GainExpr& expr) {
  if (expr.is_zero()) return Sign::Zero;
  int positive = 0;
  int negative = 0;
  for (const auto& sample : canonical_wager_samples()) {
    const Rational v = expr.evaluate(sample);
    if (signum(v) > 0) {
      ++positive;
    } else if (signum(v) < 0) {
      ++negative;
    } else {
      return Sign::Indeterminate;
    }
  }
  if (negative == 0) return Sign::Positive;
  if (positive == 0) return Sign::Negative;
  return Sign::Indeterminate;
}

Sign determinate_sign(const GainExpr& expr) {
  const Sign s = sign_of(expr);
  if (s == Sign::Indeterminate) {
    throw OracleError("sign of expected gain " + to_string(expr) +
                      " is not determined over the wager region");
  }
  return s;
}

}  // namespace betbench
