#include "valkit/detail/series_text.hpp"

#include <cctype>
#include <sstream>

#include "valkit/error.hpp"

namespace valkit::detail {

namespace {

class SeriesTextParser {
 public:
  explicit SeriesTextParser(std::string_view text) : text_(text) {}

  SeriesText parse() {
    SeriesText out;
    bool negative = false;
    skip_space();
    if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
    while (true) {
      skip_space();
      if (peek() == 'O') {
        if (negative) error("term after '-'");
        out.cap = big_o();
        skip_space();
        if (pos_ != text_.size()) error("end of input after O(...)");
        return out;
      }
      TextTerm term = this->term();
      if (negative) term.coefficient = -term.coefficient;
      out.terms.push_back(term);
      skip_space();
      if (pos_ == text_.size()) return out;
      if (peek() != '+' && peek() != '-') error("'+' or '-'");
      negative = text_[pos_++] == '-';
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& expected) const {
    throw ParseError(pos_, {expected}, "malformed series text");
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("'") + c + "'");
    ++pos_;
  }

  BigInt natural() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("digit");
    BigInt value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
    return value;
  }

  BigInt signed_integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    BigInt v = natural();
    return negative ? BigInt(-v) : v;
  }

  Rational signed_rational() {
    const BigInt num = signed_integer();
    skip_space();
    if (peek() != '/') return Rational(num);
    ++pos_;
    const BigInt den = natural();
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in series text");
    return Rational(num, den);
  }

  TextExponent exponent() {
    skip_space();
    TextExponent e;
    if (peek() == '(') {
      ++pos_;
      e.major = signed_rational();
      skip_space();
      if (peek() == ',') {
        ++pos_;
        e.minor = signed_rational();
        e.is_pair = true;
      }
      expect(')');
    } else {
      e.major = Rational(signed_integer());
    }
    return e;
  }

  TextExponent monomial_exponent() {
    expect('t');
    skip_space();
    if (peek() != '^') return TextExponent{1, 0, false};
    ++pos_;
    return exponent();
  }

  TextTerm term() {
    skip_space();
    if (peek() == 't') return {Rational(1), monomial_exponent()};
    Rational c;
    if (peek() == '(') {
      ++pos_;
      c = signed_rational();
      expect(')');
    } else {
      const BigInt num = natural();
      skip_space();
      c = Rational(num);
      if (peek() == '/') {
        ++pos_;
        const BigInt den = natural();
        if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in series text");
        c = Rational(num, den);
      }
    }
    skip_space();
    if (peek() != '*') return {c, TextExponent{}};
    ++pos_;
    return {c, monomial_exponent()};
  }

  TextExponent big_o() {
    expect('O');
    expect('(');
    skip_space();
    TextExponent e;
    if (peek() == '1') {
      ++pos_;
    } else {
      e = monomial_exponent();
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeriesText parse_series_text(std::string_view text) { return SeriesTextParser(text).parse(); }

std::string render_exponent(const TextExponent& e) {
  if (e.is_pair) return "(" + to_string(e.major) + "," + to_string(e.minor) + ")";
  const bool plain = boost::multiprecision::denominator(e.major) == 1 && e.major >= 0;
  return plain ? to_string(e.major) : "(" + to_string(e.major) + ")";
}

std::string render_series(const std::vector<TextTerm>& terms, const std::optional<TextExponent>& cap) {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms) {
    Rational c = term.coefficient;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool constant = !term.exponent.is_pair && term.exponent.major == 0;
    const bool plain_c = boost::multiprecision::denominator(c) == 1;
    const std::string coeff = plain_c ? to_string(c) : "(" + to_string(c) + ")";
    if (constant) {
      os << to_string(c);
      continue;
    }
    if (c != 1) os << coeff << "*";
    os << "t";
    const bool linear = !term.exponent.is_pair && term.exponent.major == 1;
    if (!linear) os << "^" << render_exponent(term.exponent);
  }
  if (cap) {
    if (!first) os << " + ";
    const bool unit_cap = !cap->is_pair && cap->major == 0;
    os << (unit_cap ? std::string("O(1)") : "O(t^" + render_exponent(*cap) + ")");
  } else if (first) {
    os << "0";
  }
  return os.str();
}

}  // namespace valkit::detail
