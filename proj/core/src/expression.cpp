#include "valkit/expression.hpp"

#include <cctype>
#include <string>

#include "valkit/error.hpp"

namespace valkit {

namespace {

template <class Algebra>
class ExpressionParser {
 public:
  using Value = typename Algebra::Value;

  ExpressionParser(std::string_view text, Algebra& algebra) : text_(text), algebra_(algebra) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) error({"operator", "end of input"});
    return v;
  }

 private:
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), "malformed expression");
  }

  Value expr() {
    Value acc = term();
    while (peek() == '+' || peek() == '-') {
      const char op = text_[pos_++];
      Value rhs = term();
      acc = op == '+' ? algebra_.add(acc, rhs) : algebra_.sub(acc, rhs);
    }
    return acc;
  }

  Value term() {
    Value acc = unary();
    while (peek() == '*' || peek() == '/') {
      const char op = text_[pos_++];
      Value rhs = unary();
      acc = op == '*' ? algebra_.mul(acc, rhs) : algebra_.div(acc, rhs);
    }
    return acc;
  }

  Value unary() {
    if (peek() == '-') {
      ++pos_;
      return algebra_.neg(unary());
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek() != '^') return base;
    ++pos_;
    return algebra_.pow(base, exponent());
  }

  std::int64_t exponent() {
    bool parenthesised = false;
    if (peek() == '(') {
      parenthesised = true;
      ++pos_;
    }
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error({"integer exponent"});
    const std::int64_t e = to_int64(natural());
    if (parenthesised) {
      if (peek() != ')') error({"')'"});
      ++pos_;
    }
    return negative ? -e : e;
  }

  BigInt natural() {
    BigInt value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
    }
    return value;
  }

  Value primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (peek() != ')') error({"')'"});
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return algebra_.literal(natural());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return algebra_.variable(std::string(text_.substr(start, pos_ - start)), start);
    }
    error({"number", "'('", "variable"});
  }

  std::string_view text_;
  Algebra& algebra_;
  std::size_t pos_ = 0;
};

struct RationalAlgebra {
  using Value = Rational;
  Value literal(const BigInt& n) { return Rational(n); }
  Value variable(const std::string& name, std::size_t pos) {
    throw ParseError(pos, {"number"}, "unexpected variable '" + name + "' in a rational expression");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) {
    if (b == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    return a / b;
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, std::int64_t e) {
    if (e < 0) {
      if (a == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
      return pow(1 / a, -e);
    }
    const BigInt num = ipow(boost::multiprecision::numerator(a), static_cast<std::uint64_t>(e));
    const BigInt den = ipow(boost::multiprecision::denominator(a), static_cast<std::uint64_t>(e));
    return Rational(num, den);
  }
};

struct SeriesAlgebra {
  using Value = LaurentSeries;
  CoefficientField field;
  std::int64_t precision;

  Value literal(const BigInt& n) { return LaurentSeries::constant(field, Rational(n)); }
  Value variable(const std::string& name, std::size_t pos) {
    if (name != "t") throw ParseError(pos, {"t"}, "unknown series variable '" + name + "'");
    return LaurentSeries::monomial(field, 1, 1);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) {
    if (b.is_exact() && b.coefficients().size() == 1) {
      const auto e = b.valuation().value();
      return a * LaurentSeries::monomial(field, field.inv(b.coefficients().front()), -e);
    }
    const std::int64_t k = b.precision().value_or(precision);
    return a * b.inverse(std::min(k, precision));
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, std::int64_t e) { return a.pow(e, precision); }
};

}  // namespace

Rational evaluate_rational_expression(std::string_view text) {
  RationalAlgebra algebra;
  return ExpressionParser<RationalAlgebra>(text, algebra).parse();
}

PadicNumber evaluate_padic_expression(std::string_view text, Prime p, int precision) {
  return PadicNumber::from_rational(evaluate_rational_expression(text), p, precision);
}

LaurentSeries evaluate_series_expression(std::string_view text, const CoefficientField& field,
                                         std::int64_t precision) {
  SeriesAlgebra algebra{field, precision};
  return ExpressionParser<SeriesAlgebra>(text, algebra).parse();
}

}  // namespace valkit
