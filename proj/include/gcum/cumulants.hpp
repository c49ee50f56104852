// Joint cumulants of products of centered jointly Gaussian variables.
//
// The general engine expands a cumulant over all set partitions of the
// argument positions, weighting each partition with (-1)^(i-1) * (i-1)! and
// multiplying the moments of the merged blocks.  A direct constructive
// enumerator covers the all-doublet case, and a small rule layer shortcuts
// singlet/doublet mixtures.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcum/moments.hpp"
#include "gcum/poly.hpp"

namespace gcum {

/// One cumulant argument: the product of the listed variables.  A group of
/// size 1/2/3/... is a singlet/doublet/triplet/...
using Group = IndexList;

/// Ordered list of cumulant arguments.  The result is invariant under any
/// permutation of the groups and any reordering within each group.
class CumulantQuery {
 public:
  explicit CumulantQuery(std::vector<Group> groups);

  const std::vector<Group>& groups() const { return groups_; }
  std::size_t group_count() const { return groups_.size(); }

  /// Total index count across all groups.
  std::size_t total_order() const;

  friend bool operator==(const CumulantQuery&, const CumulantQuery&) = default;

 private:
  std::vector<Group> groups_;
};

/// Raised when a request exceeds the configured total-order ceiling; pairing
/// counts grow as (2k-1)!!, so large orders are refused rather than hung on.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CumulantOptions {
  /// Ceiling on the total index count of a query.
  std::size_t max_total_order = 16;
  /// Skip partitions containing a block of odd total index count (their
  /// moment is zero).  Disabling this gives the reference evaluation used to
  /// validate the pruning; results are identical.
  bool prune_odd_blocks = true;
  /// Worker threads for the partition loop.  The result is independent of
  /// the thread count (exact integer accumulation).
  unsigned threads = 1;
};

/// Joint cumulant of the query's group products, as an exact polynomial in
/// covariance symbols.  Zero whenever the total index count is odd.
Poly cumulant(const CumulantQuery& q, const CumulantOptions& opts = {});

/// Cumulant of the k canonical doublets (1,2),(3,4),...,(2k-1,2k) by direct
/// enumeration: V(1,2) for k == 1, otherwise the unit-coefficient sum over
/// the scheme pairings.  Equals cumulant() on the same doublets; for k >= 4
/// the scheme set is a strict subset of the pairings that merely avoid every
/// original pair, and the partition formula agrees with the scheme.
Poly cumulant_doublets_direct(std::size_t k);

enum class MixedRule { Zero, Collapsed, NoRule };

struct MixedRuleResult {
  MixedRule rule = MixedRule::NoRule;
  /// Set when rule == Collapsed: the two singlets replaced by one doublet.
  std::optional<CumulantQuery> collapsed;
};

/// Shortcut rules for queries mixing singlets and doublets: one singlet or
/// three or more singlets give zero; exactly two singlets collapse into a
/// doublet.  Queries containing any group of size > 2 are outside the rules'
/// scope and yield NoRule.  This is an optional fast path; the general
/// engine never requires it.
MixedRuleResult apply_mixed_rules(const CumulantQuery& q);

struct ConjectureCheck {
  /// True when every coefficient of the cumulant is 0 or 1, i.e. the result
  /// is a plain sub-sum of pairings.
  bool holds = false;
  /// On failure, one offending monomial and its coefficient.
  std::optional<std::pair<Monomial, Coeff>> witness;
  /// Number of surviving monomials.
  std::size_t term_count = 0;
};

/// Checks the unit-coefficient property for a query whose indices are all
/// distinct.  Queries with duplicated indices are rejected.
ConjectureCheck check_unit_coefficient_conjecture(const CumulantQuery& q,
                                                  const CumulantOptions& opts = {});

/// Block-size shape of a partition: sizes in descending order.
using PartitionShape = std::vector<std::size_t>;

/// Groups the partitions of an ell-element set by shape and reports the sum
/// of the weights (-1)^(i-1) * (i-1)! per shape; this reproduces the signed
/// counts of the univariate moments-to-cumulants expansion.  Requires
/// 2 <= ell <= 8.
std::map<PartitionShape, Coeff> moments_to_cumulants_structural_check(std::size_t ell);

}  // namespace gcum
