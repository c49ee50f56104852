#include "gcum/moments.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace gcum {

IndexList::IndexList(std::vector<Index> indices) : indices_(std::move(indices)) {
  for (Index i : indices_) {
    if (i == 0) throw std::invalid_argument("variable indices start at 1");
  }
  std::sort(indices_.begin(), indices_.end());
}

IndexList::IndexList(std::initializer_list<Index> indices)
    : IndexList(std::vector<Index>(indices)) {}

IndexList IndexList::from_sorted(std::vector<Index> indices) {
  IndexList out;
  out.indices_ = std::move(indices);
  return out;
}

std::size_t IndexListHash::operator()(const IndexList& ix) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Index i : ix.values()) {
    h ^= i;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

IndexList merged(const IndexList& a, const IndexList& b) {
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::merge(a.values().begin(), a.values().end(), b.values().begin(),
             b.values().end(), std::back_inserter(out));
  return IndexList::from_sorted(std::move(out));
}

namespace {

Poly moment_impl(const std::vector<Index>& ix, MomentCache* cache) {
  const std::size_t n = ix.size();
  if (n % 2 != 0) return Poly{};
  if (n == 0) return Poly::constant(1);

  if (cache) {
    auto it = cache->find(IndexList::from_sorted(ix));
    if (it != cache->end()) return it->second;
  }

  // Pair the first index with each of the others; duplicated values yield
  // identical sub-results whose coefficients merge on collection.
  Poly sum;
  std::vector<Index> rest;
  rest.reserve(n - 2);
  for (std::size_t j = 1; j < n; ++j) {
    rest.clear();
    rest.insert(rest.end(), ix.begin() + 1, ix.begin() + j);
    rest.insert(rest.end(), ix.begin() + j + 1, ix.end());
    const Poly sub = moment_impl(rest, cache);
    const Monomial pair_symbol{CovSymbol(ix[0], ix[j])};
    for (const auto& [m, c] : sub.terms()) {
      sum.add_term(m * pair_symbol, c);
    }
  }

  if (cache) cache->emplace(IndexList::from_sorted(ix), sum);
  return sum;
}

}  // namespace

Poly moment(const IndexList& ix) { return moment_impl(ix.values(), nullptr); }

Poly moment_memoized(const IndexList& ix, MomentCache& cache) {
  return moment_impl(ix.values(), &cache);
}

}  // namespace gcum
