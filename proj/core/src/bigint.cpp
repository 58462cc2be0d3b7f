#include "valkit/bigint.hpp"

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <sstream>

#include "valkit/error.hpp"
#include "valkit/valuation.hpp"

namespace valkit {

namespace {

constexpr const char* kErrorNames[] = {
    "InvalidArgument",   "NotPrime",         "PrimeMismatch",       "FieldMismatch",
    "GroupMismatch",     "RingMismatch",     "ArityMismatch",       "PrecisionLoss",
    "DivisionByZero",    "NotHomogeneous",   "BecameZero",          "NotASimpleRoot",
    "HypothesisFailed",  "ResidueObstruction", "ValuationNotDivisible", "NotAnNthPower",
    "SingularResidueZero", "DomainTooLarge", "Unresolved",          "TooWide",
    "ParseError",
};

std::string describe_parse_error(std::size_t position, const std::vector<std::string>& expected,
                                 const std::string& message) {
  std::ostringstream os;
  os << message << " at position " << position;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << ", ";
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  return kErrorNames[static_cast<int>(kind)];
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorKind::ParseError, describe_parse_error(position, expected, message)),
      position_(position),
      expected_(std::move(expected)) {}

std::int64_t Valuation::value() const {
  if (!value_) fail(ErrorKind::InvalidArgument, "valuation is infinite");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

BigInt prime_power(Prime p, std::int64_t exponent) {
  if (exponent < 0) fail(ErrorKind::InvalidArgument, "negative exponent in prime_power");
  return ipow(BigInt(p), static_cast<std::uint64_t>(exponent));
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t strip_prime(BigInt& n, Prime p) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "order of zero is infinite");
  std::int64_t order = 0;
  const BigInt bp = p;
  while (n % bp == 0) {
    n /= bp;
    ++order;
  }
  return order;
}

std::int64_t p_adic_order(const BigInt& n, Prime p) {
  BigInt copy = n;
  return strip_prime(copy, p);
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  if (m == 1) return 0;
  BigInt r = floor_mod(a, m);
  if (r == 0) fail(ErrorKind::DivisionByZero, "zero has no modular inverse");
  BigInt inv = boost::integer::mod_inverse(r, m);
  if (inv == 0) fail(ErrorKind::DivisionByZero, "element is not invertible modulo " + to_string(m));
  return inv;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(BigInt(n), 32);
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

std::int64_t to_int64(const BigInt& n) {
  if (n > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      n < BigInt(std::numeric_limits<std::int64_t>::min())) {
    fail(ErrorKind::InvalidArgument, "integer does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
    if (i == s.size()) throw ParseError(0, {"integer"}, "malformed rational '" + text + "'");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError(i, {"digit"}, "malformed rational '" + text + "'");
      value = value * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-value) : value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(std::string_view(text).substr(0, slash));
  const BigInt den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace valkit
