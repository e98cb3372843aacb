#include "hermult/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hermult/errors.hpp"

namespace hermult {

MultiIndex::MultiIndex(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw InvalidArityError("multi-index arity must be at least 1");
  }
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

MultiIndex MultiIndex::zero(std::size_t arity) {
  if (arity == 0) {
    throw InvalidArityError("multi-index arity must be at least 1");
  }
  return MultiIndex(std::vector<unsigned>(arity, 0));
}

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t i) {
  if (i >= arity) {
    throw DimensionError("unit multi-index coordinate out of range");
  }
  std::vector<unsigned> parts(arity, 0);
  parts[i] = 1;
  return MultiIndex(std::move(parts));
}

MultiIndex MultiIndex::incremented(std::size_t i) const {
  MultiIndex out = *this;
  ++out.parts_.at(i);
  ++out.degree_;
  return out;
}

MultiIndex MultiIndex::decremented(std::size_t i) const {
  if (parts_.at(i) == 0) {
    throw DomainError("cannot decrement a zero multi-index part");
  }
  MultiIndex out = *this;
  --out.parts_[i];
  --out.degree_;
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) {
    return c;
  }
  if (auto c = a.degree_ <=> b.degree_; c != 0) {
    return c;
  }
  // Descending lexicographic: the larger leading part sorts first.
  return b.parts_ <=> a.parts_;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) {
  os << '(';
  for (std::size_t i = 0; i < k.arity(); ++i) {
    os << (i ? "," : "") << k[i];
  }
  return os << ')';
}

namespace {

void compositions(std::vector<unsigned>& prefix, std::size_t arity, unsigned remaining,
                  std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == arity) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = remaining + 1; first-- > 0;) {
    prefix.push_back(first);
    compositions(prefix, arity, remaining - first, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_fixed_degree(std::size_t arity, unsigned degree) {
  if (arity == 0) {
    throw InvalidArityError("enumerate_fixed_degree: arity must be at least 1");
  }
  std::vector<MultiIndex> out;
  std::vector<unsigned> prefix;
  prefix.reserve(arity);
  compositions(prefix, arity, degree, out);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt mi_factorial(const MultiIndex& k) {
  BigInt out = 1;
  for (unsigned p : k.parts()) {
    out *= factorial(p);
  }
  return out;
}

MultiIndex IndexTuple::occurrence_counts(std::size_t arity) const {
  std::vector<unsigned> counts(arity, 0);
  for (unsigned s : slots) {
    if (s >= arity) {
      throw DimensionError("index tuple slot out of range");
    }
    ++counts[s];
  }
  return MultiIndex(std::move(counts));
}

IndexTuple sorted_tuple(const MultiIndex& k) {
  IndexTuple t;
  t.slots.reserve(k.degree());
  for (std::size_t j = 0; j < k.arity(); ++j) {
    t.slots.insert(t.slots.end(), k[j], static_cast<unsigned>(j));
  }
  return t;
}

void for_each_index_tuple(const MultiIndex& k, const std::function<void(std::span<const unsigned>)>& visit) {
  if (k.degree() > kMaxTupleDegree) {
    throw SizeError("index tuple enumeration limited to |k| <= " + std::to_string(kMaxTupleDegree));
  }
  std::vector<unsigned> slots = sorted_tuple(k).slots;
  do {
    visit(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
}

std::vector<IndexTuple> index_tuples(const MultiIndex& k) {
  if (k.degree() > kMaxTupleDegree) {
    throw SizeError("index tuple enumeration limited to |k| <= " + std::to_string(kMaxTupleDegree));
  }
  const BigInt count = factorial(k.degree()) / mi_factorial(k);
  if (count > kMaxMaterializedTuples) {
    throw SizeError("index tuple set too large to materialize: " + count.get_str());
  }
  std::vector<IndexTuple> out;
  out.reserve(count.get_ui());
  for_each_index_tuple(k, [&](std::span<const unsigned> slots) {
    out.push_back(IndexTuple{std::vector<unsigned>(slots.begin(), slots.end())});
  });
  return out;
}

std::vector<unsigned> q_support(unsigned total_degree) {
  std::vector<unsigned> out;
  for (unsigned d = total_degree + 2; d >= 2; d -= 2) {
    out.push_back(d - 2);
  }
  return out;
}

}  // namespace hermult
