#include "gcum/cumulants.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "gcum/combinat.hpp"

namespace gcum {

CumulantQuery::CumulantQuery(std::vector<Group> groups) : groups_(std::move(groups)) {
  if (groups_.empty()) {
    throw std::invalid_argument("cumulant query needs at least one group");
  }
  for (const Group& g : groups_) {
    if (g.empty()) throw std::invalid_argument("cumulant groups must be non-empty");
  }
}

std::size_t CumulantQuery::total_order() const {
  std::size_t total = 0;
  for (const Group& g : groups_) total += g.size();
  return total;
}

namespace {

Coeff factorial(std::size_t n) {
  Coeff f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
  return f;
}

/// (-1)^(i-1) * (i-1)! for a partition with i blocks.
Coeff partition_weight(std::size_t block_count) {
  Coeff w = factorial(block_count - 1);
  return block_count % 2 == 0 ? -w : w;
}

Poly partition_contribution(const std::vector<Group>& groups,
                            const combinat::Partition& partition,
                            MomentCache& cache) {
  Poly prod = Poly::constant(1);
  for (const combinat::Block& block : partition) {
    IndexList block_indices;
    for (std::size_t pos : block) block_indices = merged(block_indices, groups[pos]);
    prod = prod * moment_memoized(block_indices, cache);
    if (prod.is_zero()) break;
  }
  return prod.scaled(partition_weight(partition.size()));
}

bool has_odd_block(const std::vector<Group>& groups,
                   const combinat::Partition& partition) {
  for (const combinat::Block& block : partition) {
    std::size_t count = 0;
    for (std::size_t pos : block) count += groups[pos].size();
    if (count % 2 != 0) return true;
  }
  return false;
}

}  // namespace

Poly cumulant(const CumulantQuery& q, const CumulantOptions& opts) {
  const std::size_t total = q.total_order();
  if (total > opts.max_total_order) {
    throw ResourceLimitError("query order " + std::to_string(total) +
                             " exceeds the configured ceiling of " +
                             std::to_string(opts.max_total_order));
  }

  const std::vector<Group>& groups = q.groups();
  std::vector<combinat::Partition> partitions;
  combinat::SetPartitionStream stream(groups.size());
  while (auto p = stream.next()) {
    if (opts.prune_odd_blocks && has_odd_block(groups, *p)) continue;
    partitions.push_back(std::move(*p));
  }

  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, opts.threads),
                                                  partitions.size()));
  if (threads <= 1) {
    MomentCache cache;
    Poly sum;
    for (const auto& partition : partitions) {
      sum = sum + partition_contribution(groups, partition, cache);
    }
    return sum;
  }

  // Each worker folds its share of the partitions with a private moment
  // cache; exact integer accumulation makes the merged result independent
  // of the thread count.
  std::vector<Poly> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      MomentCache cache;
      Poly acc;
      for (std::size_t i = t; i < partitions.size(); i += threads) {
        acc = acc + partition_contribution(groups, partitions[i], cache);
      }
      partial[t] = std::move(acc);
    });
  }
  for (std::thread& w : workers) w.join();

  Poly sum;
  for (const Poly& p : partial) sum = sum + p;
  return sum;
}

Poly cumulant_doublets_direct(std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("doublet cumulant needs at least one doublet");
  }
  if (k == 1) return Poly::symbol(CovSymbol(1, 2));

  Poly sum;
  combinat::SchemePairingStream stream(k);
  while (auto pairing = stream.next()) {
    std::vector<CovSymbol> factors;
    factors.reserve(k);
    for (const auto& [a, b] : *pairing) {
      // Position p carries index p+1: the doublets are (1,2),(3,4),...
      factors.emplace_back(static_cast<Index>(a + 1), static_cast<Index>(b + 1));
    }
    sum.add_term(Monomial(std::move(factors)), 1);
  }
  return sum;
}

MixedRuleResult apply_mixed_rules(const CumulantQuery& q) {
  std::vector<std::size_t> singlet_positions;
  for (std::size_t i = 0; i < q.groups().size(); ++i) {
    const std::size_t size = q.groups()[i].size();
    if (size > 2) return {MixedRule::NoRule, std::nullopt};  // beyond doublets
    if (size == 1) singlet_positions.push_back(i);
  }

  const std::size_t singlets = singlet_positions.size();
  if (singlets == 0) return {MixedRule::NoRule, std::nullopt};
  if (singlets == 1 || singlets >= 3) return {MixedRule::Zero, std::nullopt};

  // Exactly two singlets: replace them with one doublet.
  std::vector<Group> collapsed;
  collapsed.reserve(q.groups().size() - 1);
  collapsed.push_back(IndexList{q.groups()[singlet_positions[0]][0],
                                q.groups()[singlet_positions[1]][0]});
  for (std::size_t i = 0; i < q.groups().size(); ++i) {
    if (i != singlet_positions[0] && i != singlet_positions[1]) {
      collapsed.push_back(q.groups()[i]);
    }
  }
  return {MixedRule::Collapsed, CumulantQuery(std::move(collapsed))};
}

ConjectureCheck check_unit_coefficient_conjecture(const CumulantQuery& q,
                                                  const CumulantOptions& opts) {
  std::vector<Index> all;
  for (const Group& g : q.groups()) {
    all.insert(all.end(), g.values().begin(), g.values().end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument(
        "unit-coefficient check requires all indices to be distinct");
  }

  const Poly p = cumulant(q, opts);
  ConjectureCheck result;
  result.term_count = p.term_count();
  for (const auto& [m, c] : p.terms()) {
    if (c != 1) {
      result.witness = {m, c};
      return result;
    }
  }
  result.holds = true;
  return result;
}

std::map<PartitionShape, Coeff> moments_to_cumulants_structural_check(std::size_t ell) {
  if (ell < 2 || ell > 8) {
    throw std::invalid_argument("structural check supports orders 2 through 8");
  }
  std::map<PartitionShape, Coeff> out;
  combinat::SetPartitionStream stream(ell);
  while (auto partition = stream.next()) {
    PartitionShape shape;
    shape.reserve(partition->size());
    for (const combinat::Block& b : *partition) shape.push_back(b.size());
    std::sort(shape.begin(), shape.end(), std::greater<>());
    out[shape] += partition_weight(partition->size());
  }
  return out;
}

}  // namespace gcum
