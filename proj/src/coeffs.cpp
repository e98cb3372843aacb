#include "hermult/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hermult {

namespace {

// Returns i = (|k| - |q|) / 2 after checking parity and the degree cap.
unsigned half_gap(unsigned k_degree, unsigned q_degree) {
  if (k_degree > kMaxTupleDegree) {
    throw SizeError("|k| = " + std::to_string(k_degree) + " exceeds the cap of " + std::to_string(kMaxTupleDegree));
  }
  if (q_degree > k_degree || (k_degree - q_degree) % 2 != 0) {
    throw ParityError("|k| - |q| must be a non-negative even number (|k| = " + std::to_string(k_degree) +
                      ", |q| = " + std::to_string(q_degree) + ")");
  }
  return (k_degree - q_degree) / 2;
}

template <Field T>
bool is_positive(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v.sign() > 0;
  } else {
    return v > 0.0 && std::isfinite(v);
  }
}

template <Field T>
T squared_norm_minus_one(const Vector<T>& lambda) {
  return dot(lambda, lambda) - T(1);
}

}  // namespace

template <Field T>
TransformedMap<T> transformed_map_from_precision(const Matrix<T>& lambda, const Matrix<T>& sigma_inv,
                                                 const Matrix<T>& upsilon) {
  if (!sigma_inv.is_square() || !upsilon.is_square() || lambda.rows() != upsilon.rows() ||
      lambda.cols() != sigma_inv.rows()) {
    throw DimensionError("transformed_map: expected Lambda m x n, Sigma n x n, Upsilon m x m; got Lambda " +
                         std::to_string(lambda.rows()) + "x" + std::to_string(lambda.cols()) + ", Sigma " +
                         std::to_string(sigma_inv.rows()) + "x" + std::to_string(sigma_inv.cols()) + ", Upsilon " +
                         std::to_string(upsilon.rows()) + "x" + std::to_string(upsilon.cols()));
  }
  Matrix<T> a = sigma_inv * lambda.transpose() * upsilon;
  Matrix<T> m = a * lambda * sigma_inv - sigma_inv;
  if constexpr (!is_exact_v<T>) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = i + 1; j < m.cols(); ++j) {
        const double avg = 0.5 * (m(i, j) + m(j, i));
        m(i, j) = avg;
        m(j, i) = avg;
      }
    }
  }
  return TransformedMap<T>{std::move(a), std::move(m)};
}

template <Field T>
TransformedMap<T> transformed_map(const Matrix<T>& lambda, const SpdMatrix<T>& sigma, const SpdMatrix<T>& upsilon) {
  return transformed_map_from_precision(lambda, sigma.inverse(), upsilon.matrix());
}

template <Field T>
T coefficient_prefactor(const MultiIndex& k, const MultiIndex& q) {
  const unsigned i = half_gap(k.degree(), q.degree());
  BigInt denominator = mi_factorial(q) * factorial(i);
  denominator <<= i;
  return from_rational<T>(BigRational(mi_factorial(k), denominator));
}

template <Field T>
T contract(const MultiIndex& k, const MultiIndex& q, const TransformedMap<T>& map, CoeffVariant variant) {
  const std::size_t n = map.a.rows();
  const std::size_t m = map.a.cols();
  if (k.arity() != n || q.arity() != m || map.m.rows() != n || map.m.cols() != n) {
    throw DimensionError("contract: k must have arity n and q arity m for an n x m map");
  }
  const unsigned pairs = half_gap(k.degree(), q.degree());
  const unsigned q_degree = q.degree();

  std::vector<std::size_t> slot_column;
  slot_column.reserve(q_degree);
  for (std::size_t c = 0; c < m; ++c) {
    slot_column.insert(slot_column.end(), q[c], c);
  }

  auto entry = [&](std::span<const unsigned> slots) -> T {
    T value(1);
    for (unsigned p = 0; p < q_degree; ++p) {
      value = value * map.a(slots[p], slot_column[p]);
      if (is_zero(value)) {
        return value;
      }
    }
    for (unsigned r = 0; r < pairs; ++r) {
      value = value * map.m(slots[q_degree + 2 * r + 1], slots[q_degree + 2 * r]);
      if (is_zero(value)) {
        return value;
      }
    }
    return value;
  };

  if (variant == CoeffVariant::PaperLiteral) {
    return entry(sorted_tuple(k).slots);
  }
  T sum(0);
  for_each_index_tuple(k, [&](std::span<const unsigned> slots) { sum = sum + entry(slots); });
  return sum;
}

template <Field T>
T coeff_from_map(const MultiIndex& k, const MultiIndex& q, const TransformedMap<T>& map, CoeffVariant variant) {
  const T reduced = contract(k, q, map, variant);
  if (is_zero(reduced)) {
    return reduced;
  }
  return coefficient_prefactor<T>(k, q) * reduced;
}

template <Field T>
T coeff_general(const MultiIndex& k, const MultiIndex& q, const Matrix<T>& lambda, const SpdMatrix<T>& sigma,
                const SpdMatrix<T>& upsilon, CoeffVariant variant) {
  half_gap(k.degree(), q.degree());
  if (k.arity() != sigma.dim() || q.arity() != upsilon.dim()) {
    throw DimensionError("coeff_general: k must match Sigma and q must match Upsilon");
  }
  return coeff_from_map(k, q, transformed_map(lambda, sigma, upsilon), variant);
}

template <Field T>
std::vector<ExpansionTerm<T>> expand_from_map(const MultiIndex& k, const TransformedMap<T>& map,
                                              CoeffVariant variant) {
  if (k.degree() > kMaxTupleDegree) {
    throw SizeError("|k| = " + std::to_string(k.degree()) + " exceeds the cap of " + std::to_string(kMaxTupleDegree));
  }
  std::vector<ExpansionTerm<T>> terms;
  for (unsigned d : q_support(k.degree())) {
    for (MultiIndex& q : enumerate_fixed_degree(map.a.cols(), d)) {
      T c = coeff_from_map(k, q, map, variant);
      if (!is_zero(c)) {
        terms.push_back(ExpansionTerm<T>{std::move(q), std::move(c)});
      }
    }
  }
  if constexpr (!is_exact_v<T>) {
    double largest = 0.0;
    for (const auto& t : terms) {
      largest = std::max(largest, std::abs(t.coeff));
    }
    std::erase_if(terms, [&](const auto& t) { return std::abs(t.coeff) <= kZeroCoefficientTolerance * largest; });
  }
  return terms;
}

template <Field T>
std::vector<ExpansionTerm<T>> expand_general(const MultiIndex& k, const Matrix<T>& lambda,
                                             const SpdMatrix<T>& sigma, const SpdMatrix<T>& upsilon,
                                             CoeffVariant variant) {
  if (k.arity() != sigma.dim()) {
    throw DimensionError("expand_general: arity of k must match Sigma");
  }
  return expand_from_map(k, transformed_map(lambda, sigma, upsilon), variant);
}

template <Field T>
T coeff_isotropic(const MultiIndex& k, const MultiIndex& q, const Matrix<T>& lambda, const T& variance,
                  CoeffVariant variant) {
  if (!is_positive(variance)) {
    throw DomainError("isotropic coefficients require a positive variance");
  }
  const unsigned i = half_gap(k.degree(), q.degree());
  if (k.arity() != lambda.cols() || q.arity() != lambda.rows()) {
    throw DimensionError("coeff_isotropic: Lambda must be m x n for k in N^n, q in N^m");
  }
  const Matrix<T> a = lambda.transpose();
  const Matrix<T> gram = a * lambda - Matrix<T>::identity(lambda.cols());
  const TransformedMap<T> unit_map{a, gram};
  const T reduced = contract(k, q, unit_map, variant);
  if (is_zero(reduced)) {
    return reduced;
  }
  return coefficient_prefactor<T>(k, q) * reduced / int_pow(variance, i);
}

template <Field T>
T coeff_vec_prob(unsigned k, const MultiIndex& q, const Vector<T>& lambda) {
  const unsigned i = half_gap(k, q.degree());
  if (lambda.size() != q.arity()) {
    throw DimensionError("coeff_vec_prob: lambda length must equal the arity of q");
  }
  return coefficient_prefactor<T>(MultiIndex{k}, q) * monomial(lambda, q) *
         int_pow(squared_norm_minus_one(lambda), i);
}

template <Field T>
T coeff_vec_phys(unsigned k, const MultiIndex& q, const Vector<T>& lambda) {
  const unsigned i = half_gap(k, q.degree());
  return coeff_vec_prob(k, q, lambda) * int_pow(T(2), i);
}

template <Field T>
T coeff_univariate(unsigned k, unsigned i, const T& lambda, const StandardFamily& family) {
  if (2 * i > k) {
    throw DomainError("coeff_univariate: i = " + std::to_string(i) + " outside [0, " + std::to_string(k / 2) + "]");
  }
  BigInt denominator = factorial(i) * factorial(k - 2 * i);
  if (std::holds_alternative<Probabilists>(family)) {
    denominator <<= i;
  }
  const T ratio = from_rational<T>(BigRational(factorial(k), denominator));
  return ratio * int_pow(lambda * lambda - T(1), i) * int_pow(lambda, k - 2 * i);
}

template <Field T>
T evaluate_expansion(const std::vector<ExpansionTerm<T>>& terms, const Vector<T>& x,
                     const Matrix<T>& upsilon_inverse) {
  HermiteEvaluator<T> eval(upsilon_inverse, x);
  T sum(0);
  for (const auto& term : terms) {
    sum = sum + term.coeff * eval(term.q);
  }
  return sum;
}

#define HERMULT_INSTANTIATE_COEFFS(T)                                                                              \
  template TransformedMap<T> transformed_map(const Matrix<T>&, const SpdMatrix<T>&, const SpdMatrix<T>&);         \
  template TransformedMap<T> transformed_map_from_precision(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&); \
  template T coefficient_prefactor<T>(const MultiIndex&, const MultiIndex&);                                      \
  template T contract(const MultiIndex&, const MultiIndex&, const TransformedMap<T>&, CoeffVariant);              \
  template T coeff_from_map(const MultiIndex&, const MultiIndex&, const TransformedMap<T>&, CoeffVariant);        \
  template T coeff_general(const MultiIndex&, const MultiIndex&, const Matrix<T>&, const SpdMatrix<T>&,           \
                           const SpdMatrix<T>&, CoeffVariant);                                                    \
  template std::vector<ExpansionTerm<T>> expand_from_map(const MultiIndex&, const TransformedMap<T>&,             \
                                                         CoeffVariant);                                           \
  template std::vector<ExpansionTerm<T>> expand_general(const MultiIndex&, const Matrix<T>&, const SpdMatrix<T>&, \
                                                        const SpdMatrix<T>&, CoeffVariant);                       \
  template T coeff_isotropic(const MultiIndex&, const MultiIndex&, const Matrix<T>&, const T&, CoeffVariant);     \
  template T coeff_vec_prob(unsigned, const MultiIndex&, const Vector<T>&);                                       \
  template T coeff_vec_phys(unsigned, const MultiIndex&, const Vector<T>&);                                       \
  template T coeff_univariate(unsigned, unsigned, const T&, const StandardFamily&);                               \
  template T evaluate_expansion(const std::vector<ExpansionTerm<T>>&, const Vector<T>&, const Matrix<T>&);

HERMULT_INSTANTIATE_COEFFS(double)
HERMULT_INSTANTIATE_COEFFS(BigRational)

#undef HERMULT_INSTANTIATE_COEFFS

}  // namespace hermult
