// Moments of products of centered jointly Gaussian variables: E(X_i1...X_in)
// expanded as an exact polynomial in covariance symbols via Wick pairing.

#pragma once

#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "gcum/poly.hpp"

namespace gcum {

/// Multiset of variable indices, stored sorted.  Duplicates are allowed;
/// indices start at 1.
class IndexList {
 public:
  IndexList() = default;
  explicit IndexList(std::vector<Index> indices);
  IndexList(std::initializer_list<Index> indices);

  /// Wraps an already-sorted vector without re-sorting.
  static IndexList from_sorted(std::vector<Index> indices);

  const std::vector<Index>& values() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  Index operator[](std::size_t i) const { return indices_[i]; }

  friend bool operator==(const IndexList&, const IndexList&) = default;

 private:
  std::vector<Index> indices_;
};

struct IndexListHash {
  std::size_t operator()(const IndexList& ix) const;
};

/// Multiset union of two index lists.
IndexList merged(const IndexList& a, const IndexList& b);

/// Cache for moment_memoized, keyed on the sorted index multiset.  A cache
/// instance is not synchronized; confine it to one call tree (each engine
/// worker thread owns its own cache).
using MomentCache = std::unordered_map<IndexList, Poly, IndexListHash>;

/// E(X_i1...X_in): the zero polynomial when n is odd, the constant 1 when
/// n == 0, otherwise the sum over all pairings of the positions of the
/// product of covariance symbols.  Computed by pairing the first index with
/// each of the others and recursing on the rest; canonical collection merges
/// the coefficients arising from duplicated indices.
Poly moment(const IndexList& ix);

/// Same result as moment(); repeated sub-multisets are computed once.
Poly moment_memoized(const IndexList& ix, MomentCache& cache);

}  // namespace gcum
