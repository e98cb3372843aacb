#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "hermult/coeffs.hpp"
#include "hermult/multiindex.hpp"
#include "hermult/rational.hpp"
#include "hermult/tensor.hpp"

namespace hermult {

using RationalMatrix = Matrix<BigRational>;
using RationalVector = Vector<BigRational>;

/// Highest |k| hermite_symbolic will expand.
inline constexpr unsigned kMaxSymbolicDegree = 8;
/// Highest |k| oracle_compare accepts.
inline constexpr unsigned kMaxOracleDegree = 5;

/// Sparse polynomial in x_0..x_{arity-1} with exact rational coefficients.
/// Zero coefficients are never stored; terms iterate in canonical
/// multi-index order.
class MPoly {
 public:
  using TermMap = std::map<MultiIndex, BigRational>;

  explicit MPoly(std::size_t arity);

  static MPoly constant(std::size_t arity, const BigRational& c);
  /// The coordinate polynomial x_i (0-based).
  static MPoly variable(std::size_t arity, std::size_t i);
  static MPoly monomial(const MultiIndex& exponents, const BigRational& c);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] BigRational coefficient(const MultiIndex& exponents) const;

  [[nodiscard]] BigRational evaluate(const RationalVector& point) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const BigRational& c, const MPoly& p);
  friend bool operator==(const MPoly&, const MPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p);

 private:
  void add_term(const MultiIndex& exponents, const BigRational& c);
  void require_same_arity(const MPoly& rhs) const;

  std::size_t arity_;
  TermMap terms_;
};

MPoly mpoly_add(const MPoly& p, const MPoly& q);
MPoly mpoly_mul(const MPoly& p, const MPoly& q);
MPoly mpoly_scale(const MPoly& p, const BigRational& c);

/// Exact d/dx_i (0-based coordinate).
MPoly mpoly_derivative(const MPoly& p, std::size_t i);

/// P(L x) as a polynomial in x, for P of arity n and L of shape n x m.
MPoly mpoly_compose_linear(const MPoly& p, const RationalMatrix& l);

/// P_k with d^k exp(-x^T B x / 2) = (-1)^{|k|} P_k exp(-x^T B x / 2), built
/// by repeated symbolic differentiation: P_{k+e_i} = (Bx)_i P_k - d_i P_k.
MPoly hermite_symbolic(const MultiIndex& k, const RationalMatrix& precision);

/// Caches P_k for one B so that sibling multi-indices share their prefixes.
class SymbolicHermiteCache {
 public:
  explicit SymbolicHermiteCache(RationalMatrix precision);
  const MPoly& operator()(const MultiIndex& k);

 private:
  RationalMatrix precision_;
  std::vector<MPoly> linear_forms_;
  std::map<MultiIndex, MPoly> memo_;
};

struct OracleResult {
  bool equal = false;
  MPoly lhs{1};
  MPoly rhs{1};
  MPoly diff{1};
  std::vector<ExpansionTerm<BigRational>> terms;
};

/// Expands both sides of H_k(Lambda^T x; Sigma) = sum_q T_{k,q} H_q(x; Upsilon)
/// as exact polynomials in x and compares them. Sigma and Upsilon need only
/// be symmetric and invertible.
OracleResult oracle_compare(const MultiIndex& k, const RationalMatrix& lambda, const RationalMatrix& sigma,
                            const RationalMatrix& upsilon, CoeffVariant variant = CoeffVariant::Symmetrized);

}  // namespace hermult
