#include <doctest.h>

#include <algorithm>
#include <set>

#include "hermult/errors.hpp"
#include "hermult/multiindex.hpp"

using namespace hermult;

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Every multi-index of the given arity with |k| <= max_degree, by brute force
// over the box [0, max_degree]^arity.
std::vector<MultiIndex> all_up_to(std::size_t arity, unsigned max_degree) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> parts(arity, 0);
  while (true) {
    unsigned sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum <= max_degree) out.emplace_back(parts);
    std::size_t i = 0;
    while (i < arity && parts[i] == max_degree) parts[i++] = 0;
    if (i == arity) break;
    ++parts[i];
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_fixed_degree lists compositions in descending-lex order") {
  CHECK(enumerate_fixed_degree(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_fixed_degree(1, 3) == std::vector<MultiIndex>{{3}});
  CHECK(enumerate_fixed_degree(3, 0) == std::vector<MultiIndex>{{0, 0, 0}});
  CHECK_THROWS_AS(enumerate_fixed_degree(0, 2), InvalidArityError);
}

TEST_CASE("enumerate_fixed_degree has C(d+m-1, m-1) distinct elements of degree d") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (unsigned d = 0; d <= 8; ++d) {
      const auto ks = enumerate_fixed_degree(m, d);
      CHECK(BigInt(ks.size()) == binomial(d + m - 1, m - 1));
      CHECK(std::is_sorted(ks.begin(), ks.end()));
      CHECK(std::adjacent_find(ks.begin(), ks.end()) == ks.end());
      for (const auto& k : ks) {
        CHECK(k.degree() == d);
        CHECK(k.arity() == m);
      }
    }
  }
}

TEST_CASE("multi-index ordering is graded then descending-lex") {
  CHECK(MultiIndex{0, 0} < MultiIndex{1, 0});
  CHECK(MultiIndex{1, 0} < MultiIndex{0, 1});
  CHECK(MultiIndex{0, 1} < MultiIndex{2, 0});
  CHECK(MultiIndex{2, 0} < MultiIndex{1, 1});
  auto box = all_up_to(3, 4);
  std::sort(box.begin(), box.end());
  for (std::size_t i = 1; i < box.size(); ++i) {
    CHECK(box[i - 1].degree() <= box[i].degree());
  }
}

TEST_CASE("multi-index construction and arithmetic") {
  CHECK_THROWS_AS(MultiIndex(std::vector<unsigned>{}), InvalidArityError);
  CHECK_THROWS_AS(MultiIndex::zero(0), InvalidArityError);
  const MultiIndex k{2, 0, 3};
  CHECK(k.degree() == 5);
  CHECK(k.incremented(1) == MultiIndex{2, 1, 3});
  CHECK(k.decremented(2) == MultiIndex{2, 0, 2});
  CHECK_THROWS_AS(static_cast<void>(k.decremented(1)), DomainError);
  CHECK(MultiIndex::unit(3, 1) == MultiIndex{0, 1, 0});
}

TEST_CASE("mi_factorial") {
  CHECK(mi_factorial({2, 0, 3}) == 12);
  CHECK(mi_factorial({0, 0}) == 1);
  CHECK(mi_factorial({1, 1}) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("index_tuples realizes idx(k)") {
  // Slots are 0-based.
  CHECK(index_tuples({1, 1}) == std::vector<IndexTuple>{{{0, 1}}, {{1, 0}}});
  CHECK(index_tuples({2, 0}) == std::vector<IndexTuple>{{{0, 0}}});
  CHECK(index_tuples({0, 0}) == std::vector<IndexTuple>{{{}}});
  CHECK(sorted_tuple({1, 0, 2}).slots == std::vector<unsigned>{0, 2, 2});
}

TEST_CASE("|idx(k)| * k! = |k|! and every tuple has occurrence counts k") {
  for (std::size_t arity = 1; arity <= 4; ++arity) {
    for (const auto& k : all_up_to(arity, 8)) {
      const auto tuples = index_tuples(k);
      CHECK(BigInt(tuples.size()) * mi_factorial(k) == factorial(k.degree()));
      std::set<std::vector<unsigned>> distinct;
      for (const auto& t : tuples) {
        CHECK(t.length() == k.degree());
        CHECK(t.occurrence_counts(arity) == k);
        distinct.insert(t.slots);
      }
      CHECK(distinct.size() == tuples.size());
    }
  }
}

TEST_CASE("index tuple enumeration is size-guarded") {
  CHECK_THROWS_AS(index_tuples({13}), SizeError);
  CHECK_THROWS_AS(for_each_index_tuple({7, 6}, [](auto) {}), SizeError);
  // 12 distinct letters: 12! tuples is too many to hold.
  CHECK_THROWS_AS(index_tuples(MultiIndex(std::vector<unsigned>(12, 1))), SizeError);
  CHECK(index_tuples({12}).size() == 1);
}

TEST_CASE("q_support walks the parity chain") {
  CHECK(q_support(5) == std::vector<unsigned>{5, 3, 1});
  CHECK(q_support(4) == std::vector<unsigned>{4, 2, 0});
  CHECK(q_support(0) == std::vector<unsigned>{0});
}
