#include "gcum/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcum {

CovSymbol::CovSymbol(Index i, Index j) : lo(std::min(i, j)), hi(std::max(i, j)) {
  if (lo == 0) {
    throw std::invalid_argument("covariance symbol indices start at 1");
  }
}

Monomial::Monomial(std::vector<CovSymbol> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial::Monomial(std::initializer_list<CovSymbol> factors)
    : Monomial(std::vector<CovSymbol>(factors)) {}

Monomial Monomial::operator*(const Monomial& rhs) const {
  std::vector<CovSymbol> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  std::merge(factors_.begin(), factors_.end(), rhs.factors_.begin(),
             rhs.factors_.end(), std::back_inserter(merged));
  return Monomial(sorted_tag{}, std::move(merged));
}

bool Monomial::display_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.factors_ < b.factors_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  // FNV-1a over the factor index sequence.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const CovSymbol& f : m.factors()) {
    mix(f.lo);
    mix(f.hi);
  }
  return static_cast<std::size_t>(h);
}

Poly Poly::constant(Coeff c) {
  Poly p;
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::symbol(CovSymbol s) {
  Poly p;
  p.add_term(Monomial{s}, 1);
  return p;
}

Poly Poly::term(Coeff c, Monomial m) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Coeff Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Coeff& c) const {
  if (c == 0) return Poly{};
  Poly out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

std::vector<std::pair<Monomial, Coeff>> Poly::sorted_terms() const {
  std::vector<std::pair<Monomial, Coeff>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return Monomial::display_less(a.first, b.first);
  });
  return out;
}

Index Poly::max_index() const {
  Index mx = 0;
  for (const auto& [m, c] : terms_) {
    for (const CovSymbol& f : m.factors()) mx = std::max(mx, f.hi);
  }
  return mx;
}

Poly substitute_diagonal_one(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<CovSymbol> kept;
    kept.reserve(m.degree());
    for (const CovSymbol& f : m.factors()) {
      if (!f.diagonal()) kept.push_back(f);
    }
    out.add_term(Monomial(std::move(kept)), c);
  }
  return out;
}

Poly relabel(const Poly& p, const std::unordered_map<Index, Index>& map) {
  auto mapped = [&map](Index i) {
    auto it = map.find(i);
    if (it == map.end()) {
      throw std::invalid_argument("relabel map has no entry for index " +
                                  std::to_string(i));
    }
    return it->second;
  };
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<CovSymbol> fs;
    fs.reserve(m.degree());
    for (const CovSymbol& f : m.factors()) {
      fs.emplace_back(mapped(f.lo), mapped(f.hi));
    }
    out.add_term(Monomial(std::move(fs)), c);
  }
  return out;
}

}  // namespace gcum
