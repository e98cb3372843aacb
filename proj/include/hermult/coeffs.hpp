#pragma once

#include <vector>

#include "hermult/hermite.hpp"
#include "hermult/multiindex.hpp"
#include "hermult/spd.hpp"
#include "hermult/tensor.hpp"

namespace hermult {

/// How the order-|k| coefficient tensor is reduced to a single T_{k,q}.
///
/// Symmetrized sums the tensor over every index tuple with occurrence counts
/// k, which is the coefficient of t^k in the generating series. PaperLiteral
/// reads the single entry selected by the one-hot vector I_n^{col k}; it is
/// only correct when n = 1 and is kept to reproduce that discrepancy.
enum class CoeffVariant { Symmetrized, PaperLiteral };

/// Drop threshold, relative to the largest coefficient, for float expansions.
inline constexpr double kZeroCoefficientTolerance = 1e-14;

/// A = Sigma^{-1} Lambda^T Upsilon (n x m) and
/// M = Sigma^{-1} Lambda^T Upsilon Lambda Sigma^{-1} - Sigma^{-1} (n x n).
template <Field T>
struct TransformedMap {
  Matrix<T> a;
  Matrix<T> m;
};

template <Field T>
struct ExpansionTerm {
  MultiIndex q;
  T coeff;
  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// Lambda is m x n, so Lambda^T x lies in R^n for x in R^m.
template <Field T>
TransformedMap<T> transformed_map(const Matrix<T>& lambda, const SpdMatrix<T>& sigma, const SpdMatrix<T>& upsilon);

/// Same map from Sigma^{-1} and Upsilon directly. Only symmetry is assumed,
/// which lets the exact oracle use indefinite test matrices.
template <Field T>
TransformedMap<T> transformed_map_from_precision(const Matrix<T>& lambda, const Matrix<T>& sigma_inv,
                                                 const Matrix<T>& upsilon);

/// k! / (2^i q! i!) with i = (|k| - |q|) / 2.
template <Field T>
T coefficient_prefactor(const MultiIndex& k, const MultiIndex& q);

/// The tensor reduction of A^{col q} (x) vec(M)^{(x)i} selected by the
/// variant, without the prefactor. Slots 0..|q|-1 read A column by column
/// (block sizes q_j); each remaining slot pair (a, b) reads M(b, a).
template <Field T>
T contract(const MultiIndex& k, const MultiIndex& q, const TransformedMap<T>& map, CoeffVariant variant);

template <Field T>
T coeff_from_map(const MultiIndex& k, const MultiIndex& q, const TransformedMap<T>& map, CoeffVariant variant);

/// T_{k,q} for H_k(Lambda^T x; Sigma) = sum_q T_{k,q} H_q(x; Upsilon).
template <Field T>
T coeff_general(const MultiIndex& k, const MultiIndex& q, const Matrix<T>& lambda, const SpdMatrix<T>& sigma,
                const SpdMatrix<T>& upsilon, CoeffVariant variant = CoeffVariant::Symmetrized);

/// Every non-zero T_{k,q}, ordered by descending |q| and then canonically
/// within a degree. Exact fields drop exact zeros only.
template <Field T>
std::vector<ExpansionTerm<T>> expand_from_map(const MultiIndex& k, const TransformedMap<T>& map,
                                              CoeffVariant variant);

template <Field T>
std::vector<ExpansionTerm<T>> expand_general(const MultiIndex& k, const Matrix<T>& lambda,
                                             const SpdMatrix<T>& sigma, const SpdMatrix<T>& upsilon,
                                             CoeffVariant variant = CoeffVariant::Symmetrized);

/// T_{k,q}(Lambda; sigma^2) for Sigma = sigma^2 I_n, Upsilon = sigma^2 I_m.
template <Field T>
T coeff_isotropic(const MultiIndex& k, const MultiIndex& q, const Matrix<T>& lambda, const T& variance,
                  CoeffVariant variant = CoeffVariant::Symmetrized);

/// Te_{k,q}(lambda) = k!/(2^i q! i!) lambda^q (|lambda|^2 - 1)^i.
template <Field T>
T coeff_vec_prob(unsigned k, const MultiIndex& q, const Vector<T>& lambda);

/// T_{k,q}(lambda) = k!/(q! i!) lambda^q (|lambda|^2 - 1)^i.
template <Field T>
T coeff_vec_phys(unsigned k, const MultiIndex& q, const Vector<T>& lambda);

/// Coefficient of He_{k-2i}(x) (or H_{k-2i}(x)) in He_k(lambda x) (or H_k).
template <Field T>
T coeff_univariate(unsigned k, unsigned i, const T& lambda, const StandardFamily& family);

/// sum_terms coeff * H_q(x; Upsilon), accumulated in term order.
template <Field T>
T evaluate_expansion(const std::vector<ExpansionTerm<T>>& terms, const Vector<T>& x,
                     const Matrix<T>& upsilon_inverse);

}  // namespace hermult
