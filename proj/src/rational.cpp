#include "hermult/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "hermult/errors.hpp"

namespace hermult {

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("cannot convert non-finite double to rational");
  }
  BigRational out;
  out.value_ = mpq_class(value);  // mpq_set_d is exact
  return out;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) {
    throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string text(digits[0] == '+' ? digits.substr(1) : digits);
  return BigInt(text, 10);
}

BigRational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const BigInt exp_value = parse_integer(text.substr(e + 1), text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 4096) {
      throw ParseError("rational exponent out of range: '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    const char c = mantissa[i];
    if (c == '.') {
      if (seen_point) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
      }
      seen_point = true;
    } else if ((c == '-' || c == '+') && i == 0) {
      digits.push_back(c);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) {
        ++fraction_digits;
      }
    } else {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
  }
  const BigInt integer = parse_integer(digits, text);
  const long scale = exponent - fraction_digits;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale < 0 ? BigRational(integer, power) : BigRational(BigInt(integer * power));
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return BigRational(num, den);
  }
  return parse_decimal(text);
}

std::string BigRational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

double BigRational::to_double() const {
  const double truncated = value_.get_d();
  if (!std::isfinite(truncated)) {
    return truncated;
  }
  double best = truncated;
  mpq_class best_gap = abs(value_ - mpq_class(truncated));
  for (double candidate : {std::nextafter(truncated, HUGE_VAL), std::nextafter(truncated, -HUGE_VAL)}) {
    if (!std::isfinite(candidate)) {
      continue;
    }
    const mpq_class gap = abs(value_ - mpq_class(candidate));
    if (gap < best_gap) {
      best = candidate;
      best_gap = gap;
    }
  }
  return best;
}

BigRational abs(const BigRational& v) { return v.sign() < 0 ? -v : v; }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out(1);
  BigRational factor = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      out *= factor;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      factor *= factor;
    }
  }
  return out;
}

}  // namespace hermult
