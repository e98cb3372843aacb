#include "hermult/hermite.hpp"

#include <cmath>
#include <string>

namespace hermult {

namespace {

void check_degree(unsigned degree) {
  if (degree > kMaxHermiteDegree) {
    throw SizeError("Hermite degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxHermiteDegree));
  }
}

// h_{k+1} = (x h_k - k h_{k-1}) / variance; variance 1 gives He_k.
double scaled_recurrence(unsigned k, double x, double variance) {
  double prev = 1.0;
  if (k == 0) {
    return prev;
  }
  double curr = x / variance;
  for (unsigned j = 1; j < k; ++j) {
    const double next = (x * curr - j * prev) / variance;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

double hermite_uni(const UnivariateFamily& family, unsigned k, double x) {
  check_degree(k);
  if (!std::isfinite(x)) {
    throw DomainError("Hermite argument must be finite");
  }
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Probabilists>) {
          return scaled_recurrence(k, x, 1.0);
        } else if constexpr (std::is_same_v<F, Physicists>) {
          // H_{k+1} = 2x H_k - 2k H_{k-1}
          double prev = 1.0;
          if (k == 0) {
            return prev;
          }
          double curr = 2.0 * x;
          for (unsigned j = 1; j < k; ++j) {
            const double next = 2.0 * x * curr - 2.0 * j * prev;
            prev = curr;
            curr = next;
          }
          return curr;
        } else {
          if (!(f.variance > 0.0) || !std::isfinite(f.variance)) {
            throw DomainError("scaled Hermite family requires a positive variance");
          }
          return scaled_recurrence(k, x, f.variance);
        }
      },
      family);
}

double hermite_multi_product(const MultiIndex& k, const Vector<double>& x, const StandardFamily& family) {
  if (k.arity() != x.size()) {
    throw DimensionError("hermite_multi_product: multi-index arity does not match point dimension");
  }
  const UnivariateFamily uni = std::visit([](const auto& f) -> UnivariateFamily { return f; }, family);
  double out = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out *= hermite_uni(uni, k[i], x[i]);
  }
  return out;
}

double hermite_eval(const HermiteFamily& family, const MultiIndex& k, const Vector<double>& x) {
  if (k.arity() != x.size()) {
    throw DimensionError("hermite_eval: multi-index arity does not match point dimension");
  }
  return std::visit(
      [&](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, General>) {
          return hermite_multi(k, x, f.covariance);
        } else {
          double out = 1.0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            out *= hermite_uni(f, k[i], x[i]);
          }
          return out;
        }
      },
      family);
}

template <Field T>
HermiteEvaluator<T>::HermiteEvaluator(const Matrix<T>& precision, const Vector<T>& x, IncrementOrder order)
    : precision_(precision), x_(x), order_(order) {
  if (!precision.is_square() || precision.rows() != x.size()) {
    throw DimensionError("Hermite evaluator: precision matrix does not match point dimension");
  }
  if constexpr (!is_exact_v<T>) {
    for (double v : x) {
      if (!std::isfinite(v)) {
        throw DomainError("Hermite argument must be finite");
      }
    }
  }
  bx_ = precision_ * x_;
}

template <Field T>
T HermiteEvaluator<T>::operator()(const MultiIndex& k) {
  if (k.arity() != dim()) {
    throw DimensionError("Hermite evaluator: multi-index arity " + std::to_string(k.arity()) +
                         " does not match dimension " + std::to_string(dim()));
  }
  check_degree(k.degree());
  return compute(k);
}

template <Field T>
T HermiteEvaluator<T>::compute(const MultiIndex& k) {
  if (k.is_zero()) {
    return T(1);
  }
  if (auto it = memo_.find(k); it != memo_.end()) {
    return it->second;
  }
  // Raising left to right means the final step raises the last non-zero slot.
  std::size_t i = 0;
  if (order_ == IncrementOrder::LeftToRight) {
    for (std::size_t c = k.arity(); c-- > 0;) {
      if (k[c] > 0) {
        i = c;
        break;
      }
    }
  } else {
    for (std::size_t c = 0; c < k.arity(); ++c) {
      if (k[c] > 0) {
        i = c;
        break;
      }
    }
  }
  const MultiIndex base = k.decremented(i);
  T value = bx_[i] * compute(base);
  for (std::size_t j = 0; j < base.arity(); ++j) {
    if (base[j] == 0 || is_zero(precision_(i, j))) {
      continue;
    }
    value = value - T(base[j]) * precision_(i, j) * compute(base.decremented(j));
  }
  memo_.emplace(k, value);
  return value;
}

template <Field T>
T hermite_multi(const MultiIndex& k, const Vector<T>& x, const SpdMatrix<T>& sigma, IncrementOrder order) {
  if (k.arity() != x.size() || x.size() != sigma.dim()) {
    throw DimensionError("hermite_multi: arity of k, dimension of x and dimension of Sigma must agree");
  }
  HermiteEvaluator<T> eval(sigma.inverse(), x, order);
  return eval(k);
}

double gf_partial_sum(const Vector<double>& t, const Vector<double>& x, const SpdMatrix<double>& sigma,
                      unsigned max_degree) {
  if (t.size() != x.size() || x.size() != sigma.dim()) {
    throw DimensionError("gf_partial_sum: dimensions of t, x and Sigma must agree");
  }
  if (max_degree > kMaxSeriesDegree) {
    throw SizeError("generating-function truncation degree exceeds " + std::to_string(kMaxSeriesDegree));
  }
  HermiteEvaluator<double> eval(sigma.inverse(), x);
  double sum = 0.0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const MultiIndex& k : enumerate_fixed_degree(x.size(), d)) {
      sum += monomial(t, k) / mi_factorial(k).get_d() * eval(k);
    }
  }
  return sum;
}

double gf_closed_form(const Vector<double>& t, const Vector<double>& x, const SpdMatrix<double>& sigma) {
  const Vector<double> bt = sigma.inverse_apply(t);
  return std::exp(dot(bt, x) - 0.5 * dot(bt, t));
}

template class HermiteEvaluator<double>;
template class HermiteEvaluator<BigRational>;
template double hermite_multi(const MultiIndex&, const Vector<double>&, const SpdMatrix<double>&, IncrementOrder);
template BigRational hermite_multi(const MultiIndex&, const Vector<BigRational>&, const SpdMatrix<BigRational>&,
                                   IncrementOrder);

}  // namespace hermult
