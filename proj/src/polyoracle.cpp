#include "hermult/polyoracle.hpp"

#include <string>

#include "hermult/spd.hpp"

namespace hermult {

MPoly::MPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) {
    throw InvalidArityError("polynomial arity must be at least 1");
  }
}

MPoly MPoly::constant(std::size_t arity, const BigRational& c) {
  MPoly p(arity);
  p.add_term(MultiIndex::zero(arity), c);
  return p;
}

MPoly MPoly::variable(std::size_t arity, std::size_t i) {
  MPoly p(arity);
  p.add_term(MultiIndex::unit(arity, i), BigRational(1));
  return p;
}

MPoly MPoly::monomial(const MultiIndex& exponents, const BigRational& c) {
  MPoly p(exponents.arity());
  p.add_term(exponents, c);
  return p;
}

int MPoly::total_degree() const {
  int out = -1;
  for (const auto& [mono, c] : terms_) {
    out = std::max(out, static_cast<int>(mono.degree()));
  }
  return out;
}

BigRational MPoly::coefficient(const MultiIndex& exponents) const {
  if (exponents.arity() != arity_) {
    throw DimensionError("coefficient: monomial arity mismatch");
  }
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational MPoly::evaluate(const RationalVector& point) const {
  if (point.size() != arity_) {
    throw DimensionError("evaluate: point dimension does not match polynomial arity");
  }
  BigRational sum(0);
  for (const auto& [mono, c] : terms_) {
    sum += c * hermult::monomial(point, mono);
  }
  return sum;
}

void MPoly::add_term(const MultiIndex& exponents, const BigRational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void MPoly::require_same_arity(const MPoly& rhs) const {
  if (arity_ != rhs.arity_) {
    throw DimensionError("polynomial arity mismatch: " + std::to_string(arity_) + " vs " +
                         std::to_string(rhs.arity_));
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [mono, c] : rhs.terms_) {
    add_term(mono, c);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [mono, c] : rhs.terms_) {
    add_term(mono, -c);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_arity(b);
  MPoly out(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<unsigned> parts(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i) {
        parts[i] = ma[i] + mb[i];
      }
      out.add_term(MultiIndex(std::move(parts)), ca * cb);
    }
  }
  return out;
}

MPoly operator*(const BigRational& c, const MPoly& p) {
  MPoly out(p.arity_);
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [mono, coeff] : p.terms_) {
    out.terms_.emplace(mono, c * coeff);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  if (p.is_zero()) {
    return os << "0";
  }
  bool first = true;
  for (const auto& [mono, c] : p.terms_) {
    os << (first ? "" : " + ") << c.str();
    for (std::size_t i = 0; i < mono.arity(); ++i) {
      if (mono[i] > 0) {
        os << "*x" << i + 1;
        if (mono[i] > 1) {
          os << '^' << mono[i];
        }
      }
    }
    first = false;
  }
  return os;
}

MPoly mpoly_add(const MPoly& p, const MPoly& q) { return p + q; }
MPoly mpoly_mul(const MPoly& p, const MPoly& q) { return p * q; }
MPoly mpoly_scale(const MPoly& p, const BigRational& c) { return c * p; }

MPoly mpoly_derivative(const MPoly& p, std::size_t i) {
  if (i >= p.arity()) {
    throw DimensionError("derivative coordinate " + std::to_string(i) + " out of range for arity " +
                         std::to_string(p.arity()));
  }
  MPoly out(p.arity());
  for (const auto& [mono, c] : p.terms()) {
    if (mono[i] == 0) {
      continue;
    }
    out += MPoly::monomial(mono.decremented(i), c * BigRational(mono[i]));
  }
  return out;
}

MPoly mpoly_compose_linear(const MPoly& p, const RationalMatrix& l) {
  if (l.rows() != p.arity()) {
    throw DimensionError("compose_linear: substitution has " + std::to_string(l.rows()) +
                         " rows but the polynomial has arity " + std::to_string(p.arity()));
  }
  const std::size_t m = l.cols();
  // powers[r][e] = (L_{r,:} x)^e
  std::vector<std::vector<MPoly>> powers(p.arity());
  for (std::size_t r = 0; r < p.arity(); ++r) {
    MPoly form(m);
    for (std::size_t c = 0; c < m; ++c) {
      form += l(r, c) * MPoly::variable(m, c);
    }
    powers[r].push_back(MPoly::constant(m, BigRational(1)));
    powers[r].push_back(std::move(form));
  }
  auto power = [&](std::size_t r, unsigned e) -> const MPoly& {
    while (powers[r].size() <= e) {
      powers[r].push_back(powers[r].back() * powers[r][1]);
    }
    return powers[r][e];
  };
  MPoly out(m);
  for (const auto& [mono, c] : p.terms()) {
    MPoly term = MPoly::constant(m, c);
    for (std::size_t r = 0; r < p.arity(); ++r) {
      if (mono[r] > 0) {
        term = term * power(r, mono[r]);
      }
    }
    out += term;
  }
  return out;
}

SymbolicHermiteCache::SymbolicHermiteCache(RationalMatrix precision) : precision_(std::move(precision)) {
  if (!is_symmetric(precision_)) {
    throw NotSymmetricError("symbolic Hermite polynomials need a symmetric precision matrix");
  }
  const std::size_t n = precision_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    MPoly form(n);
    for (std::size_t j = 0; j < n; ++j) {
      form += precision_(i, j) * MPoly::variable(n, j);
    }
    linear_forms_.push_back(std::move(form));
  }
}

const MPoly& SymbolicHermiteCache::operator()(const MultiIndex& k) {
  if (k.arity() != precision_.rows()) {
    throw DimensionError("hermite_symbolic: multi-index arity does not match the precision matrix");
  }
  if (k.degree() > kMaxSymbolicDegree) {
    throw SizeError("hermite_symbolic limited to |k| <= " + std::to_string(kMaxSymbolicDegree));
  }
  if (auto it = memo_.find(k); it != memo_.end()) {
    return it->second;
  }
  MPoly value = MPoly::constant(k.arity(), BigRational(1));
  if (!k.is_zero()) {
    std::size_t i = k.arity();
    while (k[--i] == 0) {
    }
    const MultiIndex base = k.decremented(i);
    const MPoly previous = (*this)(base);
    value = linear_forms_[i] * previous - mpoly_derivative(previous, i);
  }
  return memo_.emplace(k, std::move(value)).first->second;
}

MPoly hermite_symbolic(const MultiIndex& k, const RationalMatrix& precision) {
  SymbolicHermiteCache cache(precision);
  return cache(k);
}

OracleResult oracle_compare(const MultiIndex& k, const RationalMatrix& lambda, const RationalMatrix& sigma,
                            const RationalMatrix& upsilon, CoeffVariant variant) {
  if (k.degree() > kMaxOracleDegree) {
    throw SizeError("oracle_compare limited to |k| <= " + std::to_string(kMaxOracleDegree));
  }
  if (!sigma.is_square() || !upsilon.is_square() || lambda.rows() != upsilon.rows() ||
      lambda.cols() != sigma.rows() || k.arity() != sigma.rows()) {
    throw DimensionError("oracle_compare: expected k in N^n, Lambda m x n, Sigma n x n, Upsilon m x m");
  }
  if (!is_symmetric(sigma) || !is_symmetric(upsilon)) {
    throw NotSymmetricError("oracle_compare: Sigma and Upsilon must be symmetric");
  }
  const RationalMatrix sigma_inv = inverse(sigma);
  const RationalMatrix upsilon_inv = inverse(upsilon);
  const std::size_t m = upsilon.rows();

  OracleResult result;
  result.lhs = mpoly_compose_linear(hermite_symbolic(k, sigma_inv), lambda.transpose());
  result.terms = expand_from_map(k, transformed_map_from_precision(lambda, sigma_inv, upsilon), variant);

  SymbolicHermiteCache rhs_basis(upsilon_inv);
  MPoly rhs(m);
  for (const auto& term : result.terms) {
    rhs += term.coeff * rhs_basis(term.q);
  }
  result.rhs = std::move(rhs);
  result.diff = result.lhs - result.rhs;
  result.equal = result.diff.is_zero();
  return result;
}

}  // namespace hermult
