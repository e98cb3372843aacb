#pragma once

#include <unordered_map>
#include <variant>

#include "hermult/multiindex.hpp"
#include "hermult/spd.hpp"
#include "hermult/tensor.hpp"

namespace hermult {

/// Highest polynomial degree accepted by the evaluators.
inline constexpr unsigned kMaxHermiteDegree = 60;
/// Highest truncation degree for generating-function partial sums.
inline constexpr unsigned kMaxSeriesDegree = 12;

struct Probabilists {};
struct Physicists {};
/// H_k(x; sigma^2): Probabilists at variance 1, Physicists at variance 1/2.
struct Scaled {
  double variance;
};
struct General {
  SpdMatrix<double> covariance;
};

using UnivariateFamily = std::variant<Probabilists, Physicists, Scaled>;
using StandardFamily = std::variant<Probabilists, Physicists>;
using HermiteFamily = std::variant<Probabilists, Physicists, Scaled, General>;

/// Three-term recurrence evaluation of He_k, H_k or H_k(.; sigma^2).
double hermite_uni(const UnivariateFamily& family, unsigned k, double x);

/// prod_i He_{k_i}(x_i) or prod_i H_{k_i}(x_i).
double hermite_multi_product(const MultiIndex& k, const Vector<double>& x, const StandardFamily& family);

/// Evaluates any member of the family at x. Scaled evaluates the product
/// form of H_k(x; sigma^2 I).
double hermite_eval(const HermiteFamily& family, const MultiIndex& k, const Vector<double>& x);

/// Which coordinate the recurrence raises last when building H_k. Both orders
/// reach the same value; LeftToRight is the default.
enum class IncrementOrder { LeftToRight, RightToLeft };

/// Evaluates H_k(x; Sigma) for many k at a fixed x, sharing intermediate values.
///
/// Uses H_{k+e_i} = (Bx)_i H_k - sum_j k_j B_ij H_{k-e_j} with B = Sigma^{-1};
/// only B enters, so a symmetric (not necessarily definite) B is accepted.
template <Field T>
class HermiteEvaluator {
 public:
  HermiteEvaluator(const Matrix<T>& precision, const Vector<T>& x, IncrementOrder order = IncrementOrder::LeftToRight);

  [[nodiscard]] std::size_t dim() const { return x_.size(); }
  T operator()(const MultiIndex& k);

 private:
  T compute(const MultiIndex& k);

  Matrix<T> precision_;
  Vector<T> x_;
  Vector<T> bx_;
  IncrementOrder order_;
  std::unordered_map<MultiIndex, T> memo_;
};

/// H_k(x; Sigma).
template <Field T>
T hermite_multi(const MultiIndex& k, const Vector<T>& x, const SpdMatrix<T>& sigma,
                IncrementOrder order = IncrementOrder::LeftToRight);

/// sum over |k| <= max_degree of t^k / k! * H_k(x; Sigma).
double gf_partial_sum(const Vector<double>& t, const Vector<double>& x, const SpdMatrix<double>& sigma,
                      unsigned max_degree);

/// exp(t^T B x - t^T B t / 2), the closed form the partial sums converge to.
double gf_closed_form(const Vector<double>& t, const Vector<double>& x, const SpdMatrix<double>& sigma);

extern template class HermiteEvaluator<double>;
extern template class HermiteEvaluator<BigRational>;
extern template double hermite_multi(const MultiIndex&, const Vector<double>&, const SpdMatrix<double>&,
                                     IncrementOrder);
extern template BigRational hermite_multi(const MultiIndex&, const Vector<BigRational>&,
                                          const SpdMatrix<BigRational>&, IncrementOrder);

}  // namespace hermult
