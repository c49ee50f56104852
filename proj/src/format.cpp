#include "gcum/format.hpp"

#include <sstream>
#include <stdexcept>

namespace gcum {

namespace {

// Factor runs as (symbol, exponent), factors being sorted.
std::vector<std::pair<CovSymbol, std::size_t>> factor_runs(const Monomial& m) {
  std::vector<std::pair<CovSymbol, std::size_t>> runs;
  for (const CovSymbol& f : m.factors()) {
    if (!runs.empty() && runs.back().first == f) {
      ++runs.back().second;
    } else {
      runs.push_back({f, 1});
    }
  }
  return runs;
}

std::string text_monomial(const Monomial& m, const Coeff& abs_coeff, char letter) {
  std::ostringstream out;
  if (m.is_constant()) {
    out << abs_coeff.str();
    return out.str();
  }
  bool first = true;
  if (abs_coeff != 1) {
    out << abs_coeff.str();
    first = false;
  }
  for (const auto& [sym, exp] : factor_runs(m)) {
    if (!first) out << '*';
    first = false;
    out << letter << '[' << sym.lo << ',' << sym.hi << ']';
    if (exp > 1) out << '^' << exp;
  }
  return out.str();
}

std::string latex_monomial(const Monomial& m, const Coeff& abs_coeff, char letter) {
  std::ostringstream out;
  if (m.is_constant()) {
    out << abs_coeff.str();
    return out.str();
  }
  if (abs_coeff != 1) out << abs_coeff.str();
  for (const auto& [sym, exp] : factor_runs(m)) {
    out << letter << "_{" << sym.lo << ',' << sym.hi << '}';
    if (exp > 1) out << "^{" << exp << '}';
  }
  return out.str();
}

}  // namespace

std::string format_poly(const Poly& p, OutputStyle style, bool standardized) {
  if (style == OutputStyle::Json) return poly_to_json(p).dump();
  if (p.is_zero()) return "0";

  const char letter = standardized ? 'C' : 'V';
  const bool latex = style == OutputStyle::Latex;
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    const bool negative = c < 0;
    const Coeff abs_coeff = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (latex ? (negative ? "-" : "+") : (negative ? " - " : " + "));
    }
    out << (latex ? latex_monomial(m, abs_coeff, letter)
                  : text_monomial(m, abs_coeff, letter));
  }
  return out.str();
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const CovSymbol& f : m.factors()) {
      factors.push_back(nlohmann::json::array({f.lo, f.hi}));
    }
    terms.push_back({{"coeff", c.str()}, {"factors", std::move(factors)}});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::runtime_error("polynomial JSON must be an object with a \"terms\" array");
  }
  Poly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() ||
        !term.contains("factors") || !term["factors"].is_array()) {
      throw std::runtime_error(
          "each term needs a string \"coeff\" and a \"factors\" array");
    }
    Coeff c;
    try {
      c = Coeff(term["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw std::runtime_error("bad coefficient: " + term["coeff"].get<std::string>());
    }
    std::vector<CovSymbol> factors;
    for (const auto& f : term["factors"]) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number_unsigned() ||
          !f[1].is_number_unsigned()) {
        throw std::runtime_error("each factor must be a pair of positive indices");
      }
      factors.emplace_back(f[0].get<Index>(), f[1].get<Index>());
    }
    p.add_term(Monomial(std::move(factors)), c);
  }
  return p;
}

}  // namespace gcum
