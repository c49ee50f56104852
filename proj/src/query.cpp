#include "gcum/query.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace gcum {

namespace {

std::string annotate(const std::string& message, std::size_t position) {
  std::ostringstream out;
  out << message << " at position " << position;
  return out.str();
}

class Scanner {
 public:
  explicit Scanner(const std::string& input) : input_(input) {}

  void skip_ws() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= input_.size();
  }

  char peek() const { return input_[pos_]; }

  /// 1-based position of the next character.
  std::size_t position() const { return pos_ + 1; }

  bool consume(char c) {
    skip_ws();
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < input_.size() &&
           std::isalpha(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    return input_.substr(start, pos_ - start);
  }

  Index read_index() {
    skip_ws();
    const std::size_t start = position();
    if (pos_ >= input_.size() ||
        !std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      throw ParseError("expected an index", start);
    }
    std::uint64_t value = 0;
    while (pos_ < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(input_[pos_] - '0');
      if (value > std::numeric_limits<Index>::max()) {
        throw ParseError("index too large", start);
      }
      ++pos_;
    }
    if (value == 0) throw ParseError("indices must be positive", start);
    return static_cast<Index>(value);
  }

 private:
  const std::string& input_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(annotate(message, position)), position_(position) {}

ParsedQuery parse_query(const std::string& input) {
  Scanner scan(input);

  scan.skip_ws();
  const std::size_t keyword_pos = scan.position();
  std::string keyword = scan.read_word();
  for (char& c : keyword) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  ParsedQuery query;
  if (keyword == "mv") {
    query.kind = QueryKind::Moment;
  } else if (keyword == "k") {
    query.kind = QueryKind::Cumulant;
  } else {
    throw ParseError("expected 'mv' or 'k'", keyword_pos);
  }

  std::vector<Index> flat;  // moment indices
  while (!scan.at_end()) {
    const std::size_t arg_pos = scan.position();
    if (scan.consume('(')) {
      if (query.kind == QueryKind::Moment) {
        throw ParseError("'mv' takes bare indices, not parenthesized groups",
                         arg_pos);
      }
      std::vector<Index> members;
      members.push_back(scan.read_index());
      while (scan.consume(',')) members.push_back(scan.read_index());
      if (!scan.consume(')')) {
        throw ParseError("expected ',' or ')'", scan.position());
      }
      query.groups.push_back(IndexList(std::move(members)));
    } else if (std::isdigit(static_cast<unsigned char>(scan.peek()))) {
      const Index idx = scan.read_index();
      if (query.kind == QueryKind::Moment) {
        flat.push_back(idx);
      } else {
        query.groups.push_back(IndexList{idx});
      }
    } else {
      std::ostringstream msg;
      msg << "unexpected character '" << scan.peek() << "'";
      throw ParseError(msg.str(), arg_pos);
    }
  }

  if (query.kind == QueryKind::Moment) {
    if (flat.empty()) throw ParseError("empty argument list", scan.position());
    query.groups.push_back(IndexList(std::move(flat)));
  } else if (query.groups.empty()) {
    throw ParseError("empty argument list", scan.position());
  }
  return query;
}

std::string render_query(const ParsedQuery& q) {
  std::ostringstream out;
  if (q.kind == QueryKind::Moment) {
    out << "mv";
    for (Index i : q.groups.front().values()) out << ' ' << i;
    return out.str();
  }
  out << 'k';
  for (const Group& g : q.groups) {
    out << ' ';
    if (g.size() == 1) {
      out << g[0];
    } else {
      out << '(';
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out << ',';
        out << g[i];
      }
      out << ')';
    }
  }
  return out.str();
}

}  // namespace gcum
