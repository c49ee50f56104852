// Text query language for the command line:
//
//   query   := ("mv" | "k") arg+
//   arg     := INT | "(" INT ("," INT)* ")"
//
// with INT a positive decimal integer.  Whitespace is insignificant.  Bare
// integers are singlets, parenthesized lists are groups; "mv" accepts only
// bare integers and treats the whole list as one moment argument.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcum/cumulants.hpp"

namespace gcum {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  /// 1-based character offset of the offending input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class QueryKind { Moment, Cumulant };

struct ParsedQuery {
  QueryKind kind = QueryKind::Moment;
  /// Moment queries carry exactly one group (the whole index list).
  std::vector<Group> groups;

  friend bool operator==(const ParsedQuery&, const ParsedQuery&) = default;
};

ParsedQuery parse_query(const std::string& input);

/// Canonical text form that parse_query maps back to an equal query.
std::string render_query(const ParsedQuery& q);

}  // namespace gcum
