#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace hermult {

using BigInt = mpz_class;

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = mpq_class(static_cast<long>(value));
    } else {
      value_ = mpq_class(static_cast<unsigned long>(value));
    }
  }

  BigRational(long numerator, long denominator);
  explicit BigRational(const BigInt& integer) : value_(integer) {}
  BigRational(const BigInt& numerator, const BigInt& denominator);

  /// Exact value of a finite double (every double is a dyadic rational).
  static BigRational from_double(double value);

  /// Accepts "p", "p/q", and plain decimals such as "-0.25" or "1.5e-3".
  static BigRational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  /// Nearest double (GMP's own conversion truncates).
  [[nodiscard]] double to_double() const;

  /// Always "p/q", including q = 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  BigRational& operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigRational& operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  BigRational& operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  friend BigRational operator-(const BigRational& v) {
    BigRational out;
    out.value_ = -v.value_;
    return out;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.str(); }

 private:
  mpq_class value_;
};

BigRational abs(const BigRational& v);
BigRational pow(const BigRational& base, unsigned exponent);

}  // namespace hermult
