#include <doctest.h>

#include <sstream>

#include "hermult/errors.hpp"
#include "hermult/io.hpp"
#include "hermult/polyoracle.hpp"
#include "hermult/rng.hpp"

using namespace hermult;
using Q = BigRational;

namespace {

MPoly x(std::size_t arity, std::size_t i) { return MPoly::variable(arity, i); }
MPoly one(std::size_t arity) { return MPoly::constant(arity, Q(1)); }

MPoly random_poly(SplitMix64& rng, std::size_t arity) {
  MPoly out(arity);
  const unsigned terms = 1 + static_cast<unsigned>(rng.below(4));
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> e(arity);
    for (auto& v : e) v = static_cast<unsigned>(rng.below(3));
    out += MPoly::monomial(MultiIndex(e), Q(static_cast<long>(rng.between(-4, 4)), static_cast<long>(rng.between(1, 3))));
  }
  return out;
}

}  // namespace

TEST_CASE("ring operations are exact and canonical") {
  CHECK((x(1, 0) + (Q(-1) * x(1, 0))).is_zero());
  CHECK(mpoly_mul(x(1, 0) + one(1), x(1, 0) - one(1)) == MPoly::monomial({2}, Q(1)) - one(1));
  CHECK(mpoly_scale(x(2, 0) + x(2, 1), Q(0)).is_zero());
  CHECK(mpoly_add(x(2, 0), x(2, 1)).terms().size() == 2);
  CHECK(MPoly(3).total_degree() == -1);
  CHECK(MPoly::constant(2, Q(5)).total_degree() == 0);
  CHECK(MPoly::constant(2, Q(0)).is_zero());
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), DimensionError);
  CHECK_THROWS_AS(x(2, 0) * x(1, 0), DimensionError);
  CHECK_THROWS_AS(MPoly(0), InvalidArityError);
  CHECK_THROWS_AS(MPoly::variable(2, 2), DimensionError);
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t arity = 1 + rng.below(3);
    const MPoly a = random_poly(rng, arity), b = random_poly(rng, arity), c = random_poly(rng, arity);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * one(arity) == a);
  }
}

TEST_CASE("derivatives") {
  const MPoly p = MPoly::monomial({2, 1}, Q(1));
  CHECK(mpoly_derivative(p, 0) == MPoly::monomial({1, 1}, Q(2)));
  CHECK(mpoly_derivative(x(2, 0), 1).is_zero());
  CHECK(mpoly_derivative(MPoly::monomial({3}, Q(1)), 0) == MPoly::monomial({2}, Q(3)));
  CHECK_THROWS_AS(mpoly_derivative(p, 2), DimensionError);
}

TEST_CASE("linear substitution") {
  const MPoly y1y2 = MPoly::monomial({1, 1}, Q(1));
  const RationalMatrix swap{{Q(0), Q(1)}, {Q(1), Q(0)}};
  CHECK(mpoly_compose_linear(y1y2, swap) == MPoly::monomial({1, 1}, Q(1)));
  const MPoly sq = MPoly::monomial({2}, Q(1));
  const MPoly sum = x(2, 0) + x(2, 1);
  CHECK(mpoly_compose_linear(sq, RationalMatrix{{Q(1), Q(1)}}) == sum * sum);
  const MPoly p = MPoly::monomial({1, 2}, Q(3)) + MPoly::constant(2, Q(-7, 2));
  CHECK(mpoly_compose_linear(p, RationalMatrix(2, 3)) == MPoly::constant(3, Q(-7, 2)));
  CHECK_THROWS_AS(mpoly_compose_linear(p, RationalMatrix(3, 2)), DimensionError);

  SplitMix64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const MPoly q = random_poly(rng, 2);
    RationalMatrix l(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) l(i, j) = Q(static_cast<long>(rng.between(-3, 3)), 2);
    const RationalVector pt{Q(1, 3), Q(-2), Q(5, 4)};
    CHECK(mpoly_compose_linear(q, l).evaluate(pt) == q.evaluate(l * pt));
  }
}

TEST_CASE("symbolic Hermite polynomials") {
  const RationalMatrix id1 = RationalMatrix::identity(1);
  CHECK(hermite_symbolic({0}, id1) == one(1));
  CHECK(hermite_symbolic({2}, id1) == MPoly::monomial({2}, Q(1)) - one(1));
  CHECK(hermite_symbolic({1, 1}, RationalMatrix::identity(2)) == MPoly::monomial({1, 1}, Q(1)));
  CHECK_THROWS_AS(hermite_symbolic({1, 1}, RationalMatrix{{Q(1), Q(1)}, {Q(0), Q(1)}}), NotSymmetricError);
  CHECK_THROWS_AS(hermite_symbolic({9}, id1), SizeError);
  CHECK_THROWS_AS(hermite_symbolic({1, 1}, id1), DimensionError);
}

TEST_CASE("identity precision gives products of univariate polynomials") {
  const RationalMatrix id1 = RationalMatrix::identity(1);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RationalMatrix id = RationalMatrix::identity(n);
    for (unsigned d = 0; d <= 6; ++d) {
      for (const auto& k : enumerate_fixed_degree(n, d)) {
        MPoly product = one(n);
        for (std::size_t i = 0; i < n; ++i) {
          RationalMatrix pick(1, n);
          pick(0, i) = Q(1);
          product = product * mpoly_compose_linear(hermite_symbolic({k[i]}, id1), pick);
        }
        CHECK(hermite_symbolic(k, id) == product);
      }
    }
  }
}

TEST_CASE("top-degree part is (Bx)^k") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    RationalMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = Q(static_cast<long>(rng.between(-3, 3)), 2);
    for (unsigned d = 0; d <= 5; ++d) {
      for (const auto& k : enumerate_fixed_degree(n, d)) {
        const MPoly p = hermite_symbolic(k, b);
        MPoly top = one(n);
        for (std::size_t i = 0; i < n; ++i) {
          MPoly form(n);
          for (std::size_t j = 0; j < n; ++j) form += b(i, j) * x(n, j);
          for (unsigned r = 0; r < k[i]; ++r) top = top * form;
        }
        MPoly leading(n);
        for (const auto& [mono, c] : p.terms())
          if (mono.degree() == d) leading += MPoly::monomial(mono, c);
        CHECK(leading == top);
        if (!top.is_zero()) CHECK(p.total_degree() == static_cast<int>(d));
      }
    }
  }
}

TEST_CASE("oracle_compare") {
  const RationalMatrix swap{{Q(0), Q(1)}, {Q(1), Q(0)}};
  const RationalMatrix id = RationalMatrix::identity(2);
  const auto sym = oracle_compare({1, 1}, swap, id, id);
  CHECK(sym.equal);
  CHECK(sym.diff.is_zero());
  CHECK(sym.lhs == MPoly::monomial({1, 1}, Q(1)));

  const auto lit = oracle_compare({1, 1}, swap, id, id, CoeffVariant::PaperLiteral);
  CHECK_FALSE(lit.equal);
  CHECK(lit.rhs.is_zero());
  CHECK(lit.diff == MPoly::monomial({1, 1}, Q(1)));

  const RationalMatrix sigma{{Q(2), Q(1, 3)}, {Q(1, 3), Q(-1)}};
  for (unsigned d = 0; d <= 4; ++d) {
    for (const auto& k : enumerate_fixed_degree(2, d)) {
      const auto r = oracle_compare(k, id, sigma, sigma);
      CHECK(r.equal);
      CHECK(r.terms.size() == 1);
    }
  }

  CHECK_THROWS_AS(oracle_compare({1, 1}, swap, RationalMatrix{{Q(1), Q(1)}, {Q(1), Q(1)}}, id), SingularMatrixError);
  CHECK_THROWS_AS(oracle_compare({3, 3}, swap, id, id), SizeError);
  CHECK_THROWS_AS(oracle_compare({1, 1}, swap, RationalMatrix::identity(3), id), DimensionError);
  CHECK_THROWS_AS(oracle_compare({1, 1}, swap, RationalMatrix{{Q(1), Q(1)}, {Q(0), Q(1)}}, id), NotSymmetricError);
}

TEST_CASE("MPoly serialization") {
  const MPoly p = MPoly::monomial({2, 0}, Q(3, 4)) + MPoly::monomial({0, 1}, Q(-2)) + MPoly::constant(2, Q(1));
  const Json j = to_json(p);
  CHECK(dump_json(j) == R"([{"coeff":"1/1","mono":[0,0]},{"coeff":"-2/1","mono":[0,1]},{"coeff":"3/4","mono":[2,0]}])");
  CHECK(mpoly_from_json(j, 2) == p);
  std::ostringstream os;
  os << p;
  CHECK(os.str() == "1/1 + -2/1*x2 + 3/4*x1^2");
}
