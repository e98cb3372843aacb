#pragma once

#include <cmath>
#include <concepts>
#include <type_traits>

#include "hermult/rational.hpp"

namespace hermult {

/// A scalar field usable by the tensor, Hermite and coefficient routines.
/// Instantiated for IEEE doubles and exact rationals.
template <typename T>
concept Field = std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  T(0);
  T(1);
};

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, BigRational>;

template <typename T>
T from_rational(const BigRational& value) {
  if constexpr (is_exact_v<T>) {
    return value;
  } else {
    return static_cast<T>(value.to_double());
  }
}

inline double to_double(double v) { return v; }
inline double to_double(const BigRational& v) { return v.to_double(); }

inline double magnitude(double v) { return std::abs(v); }
inline BigRational magnitude(const BigRational& v) { return abs(v); }

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const BigRational& v) { return v.is_zero(); }

template <Field T>
T int_pow(const T& base, unsigned exponent) {
  T out(1);
  T factor = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      out = out * factor;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      factor = factor * factor;
    }
  }
  return out;
}

}  // namespace hermult
