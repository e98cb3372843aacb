#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>

#include "hermult/errors.hpp"
#include "hermult/scalar.hpp"
#include "hermult/tensor.hpp"

namespace hermult {

/// Relative tolerance on |S_ij - S_ji| accepted by the floating-point path.
inline constexpr double kSymmetryTolerance = 1e-12;

template <Field T>
bool is_symmetric(const Matrix<T>& s) {
  if (!s.is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = i + 1; j < s.cols(); ++j) {
      if constexpr (is_exact_v<T>) {
        if (s(i, j) != s(j, i)) {
          return false;
        }
      } else {
        const double scale = std::max({1.0, std::abs(s(i, j)), std::abs(s(j, i))});
        if (std::abs(s(i, j) - s(j, i)) > kSymmetryTolerance * scale) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Gauss-Jordan inverse. Exact for rationals (first non-zero pivot);
/// partial pivoting for doubles.
template <Field T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) {
    throw DimensionError("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = c; r < n; ++r) {
        if (!is_zero(a(r, c))) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = 0.0;
      for (std::size_t r = c; r < n; ++r) {
        if (std::abs(a(r, c)) > best) {
          best = std::abs(a(r, c));
          pivot = r;
        }
      }
    }
    if (pivot == n) {
      throw SingularMatrixError("matrix is singular");
    }
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    const T scale = T(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * scale;
      inv(c, j) = inv(c, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) {
        continue;
      }
      const T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Symmetric positive-definite covariance with its inverse precomputed.
///
/// Certified by an LDL^T factorization whose pivots must all be positive.
/// Immutable after construction.
template <Field T>
class SpdMatrix {
 public:
  static SpdMatrix factorize(const Matrix<T>& s) {
    if (!s.is_square()) {
      throw DimensionError("covariance must be square");
    }
    if (!is_symmetric(s)) {
      throw NotSymmetricError("covariance is not symmetric");
    }
    SpdMatrix out(s);
    out.certify();
    if constexpr (is_exact_v<T>) {
      out.inverse_ = hermult::inverse(s);
    } else {
      for (std::size_t j = 0; j < out.dim(); ++j) {
        Vector<T> unit(out.dim(), T(0));
        unit[j] = T(1);
        const Vector<T> column = out.inverse_apply(unit);
        for (std::size_t i = 0; i < out.dim(); ++i) {
          out.inverse_(i, j) = column[i];
        }
      }
      out.symmetrize_inverse();
    }
    return out;
  }

  /// sigma^2 * I_n.
  static SpdMatrix isotropic(std::size_t n, const T& variance) {
    return factorize(variance * Matrix<T>::identity(n));
  }

  [[nodiscard]] std::size_t dim() const { return matrix_.rows(); }
  [[nodiscard]] const Matrix<T>& matrix() const { return matrix_; }
  [[nodiscard]] const Matrix<T>& inverse() const { return inverse_; }
  /// Unit lower-triangular L of S = L D L^T.
  [[nodiscard]] const Matrix<T>& factor() const { return factor_; }
  /// Diagonal of D, all positive.
  [[nodiscard]] const Vector<T>& pivots() const { return pivots_; }

  [[nodiscard]] Vector<T> inverse_apply(const Vector<T>& v) const {
    if (v.size() != dim()) {
      throw DimensionError("inverse_apply: dimension mismatch");
    }
    if constexpr (is_exact_v<T>) {
      return inverse_ * v;
    } else {
      // Forward substitution with L, scaling by D, back substitution with L^T.
      const std::size_t n = dim();
      Vector<T> y(n);
      for (std::size_t i = 0; i < n; ++i) {
        T acc = v[i];
        for (std::size_t j = 0; j < i; ++j) {
          acc -= factor_(i, j) * y[j];
        }
        y[i] = acc;
      }
      Vector<T> x(n);
      for (std::size_t i = n; i-- > 0;) {
        T acc = y[i] / pivots_[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          acc -= factor_(j, i) * x[j];
        }
        x[i] = acc;
      }
      return x;
    }
  }

 private:
  explicit SpdMatrix(const Matrix<T>& s) : matrix_(s), factor_(s.rows(), s.cols()), pivots_(s.rows()), inverse_(s.rows(), s.cols()) {}

  // LDL^T without square roots; D must be positive.
  void certify() {
    const std::size_t n = dim();
    for (std::size_t j = 0; j < n; ++j) {
      T dj = matrix_(j, j);
      for (std::size_t k = 0; k < j; ++k) {
        dj = dj - factor_(j, k) * factor_(j, k) * pivots_[k];
      }
      if constexpr (is_exact_v<T>) {
        if (dj.sign() <= 0) {
          throw NotPositiveDefiniteError("covariance is not positive definite");
        }
      } else if (!(dj > 0.0) || !std::isfinite(dj)) {
        throw NotPositiveDefiniteError("covariance is not positive definite");
      }
      pivots_[j] = dj;
      factor_(j, j) = T(1);
      for (std::size_t i = j + 1; i < n; ++i) {
        T acc = matrix_(i, j);
        for (std::size_t k = 0; k < j; ++k) {
          acc = acc - factor_(i, k) * factor_(j, k) * pivots_[k];
        }
        factor_(i, j) = acc / dj;
      }
    }
  }

  void symmetrize_inverse() {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        const T avg = 0.5 * (inverse_(i, j) + inverse_(j, i));
        inverse_(i, j) = avg;
        inverse_(j, i) = avg;
      }
    }
  }

  Matrix<T> matrix_;
  Matrix<T> factor_;
  Vector<T> pivots_;
  Matrix<T> inverse_;
};

template <Field T>
SpdMatrix<T> spd_factorize(const Matrix<T>& s) {
  return SpdMatrix<T>::factorize(s);
}

}  // namespace hermult
