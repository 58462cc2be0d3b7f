#include "valkit/poly_parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "valkit/error.hpp"

namespace valkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::set<std::string> scan_identifiers(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (is_ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      names.emplace(text.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

std::vector<std::string> default_variables(const std::set<std::string>& names) {
  static const std::regex indexed("x([1-9][0-9]*)");
  std::size_t highest = 0;
  bool all_indexed = !names.empty();
  for (const auto& n : names) {
    std::smatch m;
    if (!std::regex_match(n, m, indexed) || m[1].length() > 6) {
      all_indexed = false;
      break;
    }
    highest = std::max<std::size_t>(highest, std::stoul(m[1]));
  }
  if (all_indexed) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= highest; ++i) out.push_back("x" + std::to_string(i));
    return out;
  }
  return {names.begin(), names.end()};
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& variables) : text_(text) {
    for (std::size_t i = 0; i < variables.size(); ++i) index_.emplace(variables[i], i);
    arity_ = variables.size();
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek() != '\0') error({"operator", "end of input"});
    return p;
  }

 private:
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), "malformed polynomial");
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (peek() == '+' || peek() == '-') {
      const char op = text_[pos_++];
      MultiPoly rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error({"non-negative integer exponent"});
      const BigInt e = number();
      if (e > 1000) error({"exponent at most 1000"});
      base = base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  MultiPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') error({"')'"});
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(arity_, number());
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        error({"declared variable"});
      }
      return MultiPoly::variable(arity_, it->second);
    }
    error({"integer", "variable", "'('"});
  }

  BigInt number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && is_ident_start(text_[pos_])) error({"'*' between coefficient and variable"});
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t arity_ = 0;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& variables) {
  std::vector<std::string> names = variables ? *variables : default_variables(scan_identifiers(text));
  MultiPoly p = PolyParser(text, names).parse();
  return {std::move(p), std::move(names)};
}

UniPoly parse_univariate(std::string_view text, Ring ring) {
  const auto names = scan_identifiers(text);
  if (names.size() > 1) fail(ErrorKind::ArityMismatch, "expected a polynomial in one variable");
  const std::vector<std::string> vars(names.begin(), names.end());
  MultiPoly p = PolyParser(text, vars.empty() ? std::vector<std::string>{"x"} : vars).parse();
  std::vector<BigInt> cs;
  for (const auto& [e, c] : p.terms()) {
    if (cs.size() <= e[0]) cs.resize(e[0] + 1);
    cs[e[0]] += c;
  }
  return UniPoly(std::move(cs), std::move(ring));
}

Form parse_form(std::string_view text, const std::optional<std::vector<std::string>>& variables) {
  return Form(parse_polynomial(text, variables).poly);
}

}  // namespace valkit
