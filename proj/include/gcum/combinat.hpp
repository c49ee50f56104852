// Deterministic enumeration of perfect matchings (pairings) of positions,
// set partitions of positions, and the constructive scheme that builds the
// restricted pairing set used by direct doublet cumulants.
//
// All enumerators work on 0-based *positions*, not index values, so inputs
// with duplicated values are handled uniformly by the callers.  Streams are
// lazy: callers can count or fold without materializing every element.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gcum::combinat {

/// One pair of positions, ascending.
using PositionPair = std::pair<std::size_t, std::size_t>;

/// Perfect matching of positions in canonical form: positions ascending
/// within each pair, pairs sorted by first position.
using Pairing = std::vector<PositionPair>;

/// Partition block: ascending positions.
using Block = std::vector<std::size_t>;

/// Set partition in canonical form: each block sorted, blocks sorted by
/// their minimum element.
using Partition = std::vector<Block>;

/// Streams all (n-1)!! canonical pairings of positions 0..n-1, recursively
/// pairing the smallest unpaired position with each later one in turn.
/// Odd n yields an empty stream (the corresponding moment is zero);
/// n == 0 yields the single empty pairing.
class PairingStream {
 public:
  explicit PairingStream(std::size_t n);

  std::optional<Pairing> next();

 private:
  bool descend();
  bool advance();

  std::size_t n_;
  std::vector<PositionPair> stack_;
  std::vector<char> used_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Streams all Bell(n) partitions of positions 0..n-1 in lexicographic
/// restricted-growth-string order.  n == 0 yields the single empty
/// partition (used only internally by callers).
class SetPartitionStream {
 public:
  explicit SetPartitionStream(std::size_t n);

  std::optional<Partition> next();

 private:
  bool advance();
  Partition current() const;

  std::size_t n_;
  std::vector<std::size_t> rgs_;         // restricted-growth string
  std::vector<std::size_t> prefix_max_;  // prefix_max_[i] = max(rgs_[0..i])
  bool started_ = false;
  bool exhausted_ = false;
};

/// Streams the (k-1)! * 2^(k-1) pairings produced by the doublet
/// construction applied to the consecutive pairs (0,1),(2,3),...,(2k-2,2k-1):
/// keep the first pair fixed, run over all permutations of the remaining
/// pairs and all within-pair swaps among them, flatten to a length-2k
/// sequence, rotate left by one position, and re-pair consecutive elements.
/// The results are distinct and none contains one of the original pairs.
/// Requires k >= 2 (a single doublet is handled directly by callers).
class SchemePairingStream {
 public:
  explicit SchemePairingStream(std::size_t k);

  std::optional<Pairing> next();

 private:
  Pairing current() const;

  std::size_t k_;
  std::vector<std::size_t> perm_;  // ids 1..k-1 of the movable pairs
  std::size_t swap_mask_ = 0;      // bit t flips the t-th movable pair
  bool exhausted_ = false;
};

// Materializing conveniences.
std::vector<Pairing> all_pairings(std::size_t n);
std::vector<Partition> all_set_partitions(std::size_t n);
std::vector<Pairing> all_scheme_pairings(std::size_t k);

}  // namespace gcum::combinat
