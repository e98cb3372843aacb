#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hermult/errors.hpp"
#include "hermult/multiindex.hpp"
#include "hermult/scalar.hpp"

namespace hermult {

/// Longest dense tensor any routine will build.
inline constexpr std::size_t kMaxTensorLength = 10'000'000;

template <Field T>
using Vector = std::vector<T>;

/// Dense row-major matrix with positive dimensions.
template <Field T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
    data_.assign(rows * cols, T(0));
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionError("ragged matrix rows");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      out(i, i) = T(1);
    }
    return out;
  }

  /// A p x 1 matrix holding v.
  static Matrix column(const Vector<T>& v) {
    Matrix out(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out(i, 0) = v[i];
    }
    return out;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector<T> col(std::size_t j) const {
    Vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      out[i] = (*this)(i, j);
    }
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out(j, i) = (*this)(i, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      a.data_[i] = a.data_[i] + b.data_[i];
    }
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      a.data_[i] = a.data_[i] - b.data_[i];
    }
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) {
      v = s * v;
    }
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matrix product: inner dimensions differ");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc(0);
        for (std::size_t r = 0; r < a.cols_; ++r) {
          acc = acc + a(i, r) * b(r, j);
        }
        out(i, j) = acc;
      }
    }
    return out;
  }

  friend Vector<T> operator*(const Matrix& a, const Vector<T>& x) {
    if (a.cols_ != x.size()) {
      throw DimensionError("matrix-vector product: dimensions differ");
    }
    Vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T acc(0);
      for (std::size_t r = 0; r < a.cols_; ++r) {
        acc = acc + a(i, r) * x[r];
      }
      out[i] = acc;
    }
    return out;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionError("matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field To, Field From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, double>) {
        out(i, j) = to_double(m(i, j));
      } else if constexpr (std::is_same_v<From, double>) {
        out(i, j) = BigRational::from_double(m(i, j));
      } else {
        out(i, j) = m(i, j);
      }
    }
  }
  return out;
}

template <Field T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw DimensionError("dot: lengths differ");
  }
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = acc + a[i] * b[i];
  }
  return acc;
}

template <Field T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  return dot(std::span<const T>(a), std::span<const T>(b));
}

namespace detail {

inline std::size_t checked_length(std::size_t a, std::size_t b) {
  if (b != 0 && a > kMaxTensorLength / b) {
    throw SizeError("tensor length exceeds " + std::to_string(kMaxTensorLength));
  }
  return a * b;
}

}  // namespace detail

/// Standard Kronecker product: block (i, j) of the result is A(i, j) * B.
template <Field T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(detail::checked_length(a.rows(), b.rows()), detail::checked_length(a.cols(), b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
      }
    }
  }
  return out;
}

/// Vector Kronecker product: entry i * |b| + j is a_i * b_j (0-based).
template <Field T>
Vector<T> kron(const Vector<T>& a, const Vector<T>& b) {
  Vector<T> out;
  out.reserve(detail::checked_length(a.size(), b.size()));
  for (const T& ai : a) {
    for (const T& bj : b) {
      out.push_back(ai * bj);
    }
  }
  return out;
}

/// v^{(x)p}; p = 0 gives [1].
template <Field T>
Vector<T> kron_power(const Vector<T>& v, unsigned p) {
  Vector<T> out{T(1)};
  for (unsigned i = 0; i < p; ++i) {
    out = kron(out, v);
  }
  return out;
}

/// A_{:1}^{(x)q_1} (x) A_{:2}^{(x)q_2} (x) ... over columns in increasing order.
/// Satisfies (A^T b)^q = (A^{col q})^T b^{(x)|q|}.
template <Field T>
Vector<T> colwise_kron_power(const Matrix<T>& a, const MultiIndex& q) {
  if (q.arity() != a.cols()) {
    throw DimensionError("colwise_kron_power: multi-index arity " + std::to_string(q.arity()) +
                         " does not match column count " + std::to_string(a.cols()));
  }
  Vector<T> out{T(1)};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Vector<T> column = a.col(j);
    for (unsigned p = 0; p < q[j]; ++p) {
      out = kron(out, column);
    }
  }
  return out;
}

/// Column stacking: entry j * rows + i is M(i, j) (0-based).
template <Field T>
Vector<T> vec(const Matrix<T>& m) {
  Vector<T> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out.push_back(m(i, j));
    }
  }
  return out;
}

/// 0-based offset of tuple (j_1, ..., j_K) in a tensor over [0, n)^K, with
/// the first slot most significant (the kron convention above).
inline std::size_t flat_offset(std::span<const unsigned> slots, std::size_t n) {
  std::size_t offset = 0;
  for (unsigned s : slots) {
    if (s >= n) {
      throw DimensionError("flat_offset: slot out of range");
    }
    offset = offset * n + s;
  }
  return offset;
}

/// The monomial b^k = prod_i b_i^{k_i}.
template <Field T>
T monomial(const Vector<T>& b, const MultiIndex& k) {
  if (b.size() != k.arity()) {
    throw DimensionError("monomial: arity mismatch");
  }
  T out(1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out = out * int_pow(b[i], k[i]);
  }
  return out;
}

}  // namespace hermult
