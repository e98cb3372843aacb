#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "hermult/rational.hpp"

namespace hermult {

/// Largest |k| for which index-tuple sets are enumerated.
inline constexpr unsigned kMaxTupleDegree = 12;
/// Largest tuple set index_tuples() will hold in memory.
inline constexpr unsigned long kMaxMaterializedTuples = 10'000'000;

/// Ordered tuple of naturals k = (k_1, ..., k_n), n >= 1.
///
/// Ordering is graded, then descending-lexicographic within a degree, so
/// (0,0) < (1,0) < (0,1) < (2,0) < (1,1) < (0,2).
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<unsigned> parts);
  MultiIndex(std::initializer_list<unsigned> parts) : MultiIndex(std::vector<unsigned>(parts)) {}

  static MultiIndex zero(std::size_t arity);
  static MultiIndex unit(std::size_t arity, std::size_t i);

  [[nodiscard]] std::size_t arity() const { return parts_.size(); }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] bool is_zero() const { return degree_ == 0; }
  [[nodiscard]] std::span<const unsigned> parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  [[nodiscard]] MultiIndex incremented(std::size_t i) const;
  /// Requires parts()[i] > 0.
  [[nodiscard]] MultiIndex decremented(std::size_t i) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

 private:
  std::vector<unsigned> parts_;
  unsigned degree_ = 0;
};

/// All k of the given arity with |k| = degree, in canonical order.
std::vector<MultiIndex> enumerate_fixed_degree(std::size_t arity, unsigned degree);

/// k! = prod_i k_i!
BigInt mi_factorial(const MultiIndex& k);
BigInt factorial(unsigned n);

/// A word over the alphabet {0, ..., n-1}. Slot values are 0-based; the
/// flat tensor offset of a tuple is sum_p slot_p * n^(K-1-p).
struct IndexTuple {
  std::vector<unsigned> slots;

  [[nodiscard]] std::size_t length() const { return slots.size(); }
  [[nodiscard]] MultiIndex occurrence_counts(std::size_t arity) const;
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

/// The tuple with k_1 copies of 0, then k_2 copies of 1, and so on.
IndexTuple sorted_tuple(const MultiIndex& k);

/// Visits every distinct tuple whose occurrence counts equal k, in
/// lexicographic order, without materializing the set.
void for_each_index_tuple(const MultiIndex& k, const std::function<void(std::span<const unsigned>)>& visit);

/// Materialized form of for_each_index_tuple; |k|!/k! entries. Throws
/// SizeError when |k| > kMaxTupleDegree or the set exceeds
/// kMaxMaterializedTuples.
std::vector<IndexTuple> index_tuples(const MultiIndex& k);

/// [K, K-2, ...] down to 1 or 0.
std::vector<unsigned> q_support(unsigned total_degree);

}  // namespace hermult

template <>
struct std::hash<hermult::MultiIndex> {
  std::size_t operator()(const hermult::MultiIndex& k) const noexcept {
    std::size_t h = k.arity();
    for (unsigned p : k.parts()) {
      h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
