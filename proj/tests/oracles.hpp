// Test-only oracles, kept independent of the implementation paths they
// check: closed-form counts, the Bell triangle, and a moment computed by
// explicit pairing enumeration instead of the first-index recursion.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gcum/combinat.hpp"
#include "gcum/moments.hpp"
#include "gcum/poly.hpp"

namespace gcum::testing {

/// n!! = n * (n-2) * ...; by convention (-1)!! = 1, so the number of
/// pairings of m positions is double_factorial(m - 1) for even m.
inline std::uint64_t double_factorial(std::uint64_t n) {
  std::uint64_t out = 1;
  while (n > 1) {
    out *= n;
    n -= 2;
  }
  return out;
}

/// Bell numbers B(0..max) via the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(std::size_t max) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= max; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Wick sum over explicitly enumerated pairings; independent of the
/// recursive moment implementation.
inline Poly moment_by_enumeration(const IndexList& ix) {
  const std::vector<Index>& values = ix.values();
  if (values.empty()) return Poly::constant(1);
  Poly sum;
  combinat::PairingStream stream(values.size());
  while (auto pairing = stream.next()) {
    std::vector<CovSymbol> factors;
    factors.reserve(pairing->size());
    for (const auto& [a, b] : *pairing) {
      factors.emplace_back(values[a], values[b]);
    }
    sum.add_term(Monomial(std::move(factors)), 1);
  }
  return sum;
}

inline bool is_valid_partition(const combinat::Partition& partition, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& block : partition) {
    if (block.empty()) return false;
    for (std::size_t pos : block) {
      if (pos >= n || seen[pos]) return false;
      seen[pos] = 1;
      ++covered;
    }
  }
  return covered == n;
}

inline bool pairing_avoids(const combinat::Pairing& pairing,
                           const std::vector<combinat::PositionPair>& forbidden) {
  for (const auto& p : pairing) {
    for (const auto& f : forbidden) {
      if (p == f) return false;
    }
  }
  return true;
}

/// Small random polynomial with indices <= max_index and a handful of terms.
inline Poly random_poly(std::mt19937& rng, Index max_index = 6) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<Index> index(1, max_index);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Poly p;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<CovSymbol> factors;
    const int deg = degree(rng);
    for (int d = 0; d < deg; ++d) factors.emplace_back(index(rng), index(rng));
    p.add_term(Monomial(std::move(factors)), coeff(rng));
  }
  return p;
}

inline IndexList random_index_list(std::mt19937& rng, std::size_t max_len = 8,
                                   Index max_index = 5) {
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  std::uniform_int_distribution<Index> index(1, max_index);
  std::vector<Index> values(length(rng));
  for (Index& v : values) v = index(rng);
  return IndexList(std::move(values));
}

}  // namespace gcum::testing
