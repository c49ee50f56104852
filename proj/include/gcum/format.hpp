// Output rendering: text, LaTeX and JSON forms of a polynomial.  Terms
// appear in display order (total degree, then lexicographic on the factors)
// so output is stable across runs and platforms.

#pragma once

#include <string>

#include "json.hpp"

#include "gcum/poly.hpp"

namespace gcum {

enum class OutputStyle { Text, Latex, Json };

/// Renders a polynomial.  Standardized results use the symbol letter C
/// (correlation coefficients) instead of V; diagonal symbols are absent by
/// construction after standardization.  The zero polynomial renders as "0"
/// (text, LaTeX) or {"terms": []} (JSON).
std::string format_poly(const Poly& p, OutputStyle style, bool standardized);

/// {"terms": [{"coeff": "<integer>", "factors": [[i,j], ...]}, ...]} with
/// canonical factors and terms in display order.  Coefficients are strings
/// to avoid 53-bit precision loss in downstream consumers.
nlohmann::json poly_to_json(const Poly& p);

/// Strict inverse of poly_to_json; accumulates terms, so any valid input
/// collapses to the canonical polynomial.
Poly poly_from_json(const nlohmann::json& j);

}  // namespace gcum
