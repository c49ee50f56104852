#include "gcum/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcum::combinat {

PairingStream::PairingStream(std::size_t n) : n_(n), used_(n, 0) {
  stack_.reserve(n / 2);
  if (n % 2 != 0) exhausted_ = true;  // odd-length input: empty stream
}

// Completes the current partial pairing greedily: the smallest free
// position is paired with the smallest free position after it.
bool PairingStream::descend() {
  while (stack_.size() < n_ / 2) {
    std::size_t a = 0;
    while (used_[a]) ++a;
    used_[a] = 1;
    std::size_t b = a + 1;
    while (used_[b]) ++b;
    used_[b] = 1;
    stack_.push_back({a, b});
  }
  return true;
}

// Backtracks to the deepest pair whose partner can still be advanced,
// advances it, and re-descends.
bool PairingStream::advance() {
  while (!stack_.empty()) {
    auto [a, b] = stack_.back();
    stack_.pop_back();
    used_[b] = 0;
    std::size_t nb = b + 1;
    while (nb < n_ && used_[nb]) ++nb;
    if (nb < n_) {
      used_[nb] = 1;
      stack_.push_back({a, nb});
      return descend();
    }
    used_[a] = 0;
  }
  return false;
}

std::optional<Pairing> PairingStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();  // n == 0 yields the empty pairing
    return stack_;
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return stack_;
}

SetPartitionStream::SetPartitionStream(std::size_t n)
    : n_(n), rgs_(n, 0), prefix_max_(n, 0) {}

bool SetPartitionStream::advance() {
  for (std::size_t i = n_; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

Partition SetPartitionStream::current() const {
  Partition blocks;
  if (n_ == 0) return blocks;
  blocks.resize(prefix_max_[n_ - 1] + 1);
  for (std::size_t i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(i);
  return blocks;  // block ids appear in order of first use: sorted by minimum
}

std::optional<Partition> SetPartitionStream::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current();
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return current();
}

SchemePairingStream::SchemePairingStream(std::size_t k) : k_(k) {
  if (k < 2) {
    throw std::invalid_argument(
        "scheme pairing construction requires at least two doublets");
  }
  perm_.resize(k - 1);
  std::iota(perm_.begin(), perm_.end(), std::size_t{1});
}

Pairing SchemePairingStream::current() const {
  // Flatten: fixed first pair, then the movable pairs in permuted order,
  // each optionally swapped; then rotate left by one and re-pair.
  std::vector<std::size_t> flat;
  flat.reserve(2 * k_);
  flat.push_back(0);
  flat.push_back(1);
  for (std::size_t t = 0; t < perm_.size(); ++t) {
    std::size_t a = 2 * perm_[t];
    std::size_t b = a + 1;
    if (swap_mask_ >> t & 1) std::swap(a, b);
    flat.push_back(a);
    flat.push_back(b);
  }
  std::rotate(flat.begin(), flat.begin() + 1, flat.end());

  Pairing pairs;
  pairs.reserve(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    std::size_t a = flat[2 * i];
    std::size_t b = flat[2 * i + 1];
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::optional<Pairing> SchemePairingStream::next() {
  if (exhausted_) return std::nullopt;
  Pairing out = current();
  if (++swap_mask_ == (std::size_t{1} << (k_ - 1))) {
    swap_mask_ = 0;
    exhausted_ = !std::next_permutation(perm_.begin(), perm_.end());
  }
  return out;
}

std::vector<Pairing> all_pairings(std::size_t n) {
  std::vector<Pairing> out;
  PairingStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Partition> all_set_partitions(std::size_t n) {
  std::vector<Partition> out;
  SetPartitionStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Pairing> all_scheme_pairings(std::size_t k) {
  std::vector<Pairing> out;
  SchemePairingStream stream(k);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace gcum::combinat
