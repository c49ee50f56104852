// Exact sparse polynomial algebra over covariance symbols V[i,j] with
// arbitrary-precision integer coefficients.  Polynomials are the value type
// of every symbolic moment and cumulant produced by this library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gcum {

using Index = std::uint32_t;
using Coeff = boost::multiprecision::cpp_int;

/// Unordered covariance symbol: V(i,j) and V(j,i) are the same symbol.
/// Indices start at 1; construction sorts so that lo <= hi always holds.
struct CovSymbol {
  Index lo;
  Index hi;

  CovSymbol(Index i, Index j);

  bool diagonal() const { return lo == hi; }

  friend auto operator<=>(const CovSymbol&, const CovSymbol&) = default;
};

/// Product of covariance symbols, stored as a sorted multiset of factors.
/// The empty factor list is the constant monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<CovSymbol> factors);
  Monomial(std::initializer_list<CovSymbol> factors);

  const std::vector<CovSymbol>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool is_constant() const { return factors_.empty(); }

  /// Multiset union of the factor lists.
  Monomial operator*(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Display order: total degree first, then lexicographic on the factors.
  static bool display_less(const Monomial& a, const Monomial& b);

 private:
  struct sorted_tag {};
  Monomial(sorted_tag, std::vector<CovSymbol> factors)
      : factors_(std::move(factors)) {}

  std::vector<CovSymbol> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Sparse polynomial: map from canonical monomial to nonzero coefficient.
/// The empty map is the zero polynomial.  Term order is irrelevant to
/// equality; display uses the documented (degree, lexicographic) order.
class Poly {
 public:
  using TermMap = std::unordered_map<Monomial, Coeff, MonomialHash>;

  Poly() = default;  // zero

  static Poly constant(Coeff c);
  static Poly symbol(CovSymbol s);
  static Poly term(Coeff c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial; zero when the monomial is absent.
  Coeff coeff(const Monomial& m) const;

  /// Accumulates c onto the coefficient of m, erasing it if the sum is zero.
  void add_term(const Monomial& m, const Coeff& c);

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;

  /// All coefficients multiplied by c; scaling by zero gives the zero poly.
  Poly scaled(const Coeff& c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  const TermMap& terms() const { return terms_; }

  /// Terms in display order.
  std::vector<std::pair<Monomial, Coeff>> sorted_terms() const;

  /// Largest index appearing in any symbol; 0 for constants and zero.
  Index max_index() const;

 private:
  TermMap terms_;
};

/// Removes every diagonal factor V(i,i) from every monomial and recollects;
/// this is the substitution V(i,i) -> 1 used for standardized variables.
Poly substitute_diagonal_one(const Poly& p);

/// Applies an index map inside every symbol and recollects canonically.
/// The map must cover every index appearing in p.
Poly relabel(const Poly& p, const std::unordered_map<Index, Index>& map);

}  // namespace gcum
