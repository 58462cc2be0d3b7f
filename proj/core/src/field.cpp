#include "valkit/field.hpp"

#include "valkit/error.hpp"

namespace valkit {

CoefficientField CoefficientField::prime_field(Prime p) {
  require_prime(p);
  return CoefficientField(p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "Q" || text == "q" || text == "0") return rationals();
  std::int64_t p = 0;
  try {
    p = std::stoll(text);
  } catch (const std::exception&) {
    throw ParseError(0, {"Q", "prime"}, "unknown coefficient field '" + text + "'");
  }
  return prime_field(p);
}

Rational CoefficientField::normalize(const Rational& x) const {
  if (characteristic_ == 0) return x;
  const BigInt p = characteristic_;
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den % p == 0) {
    fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic " + p.str());
  }
  return Rational(floor_mod(num * inverse_mod(den, p), p));
}

Rational CoefficientField::inv(const Rational& a) const {
  const Rational n = normalize(a);
  if (n == 0) fail(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  if (characteristic_ == 0) return 1 / n;
  return Rational(inverse_mod(boost::multiprecision::numerator(n), BigInt(characteristic_)));
}

std::string CoefficientField::name() const {
  return characteristic_ == 0 ? std::string("Q") : "F_" + std::to_string(characteristic_);
}

void require_same_field(const CoefficientField& a, const CoefficientField& b) {
  if (!(a == b)) fail(ErrorKind::FieldMismatch, "coefficient fields differ: " + a.name() + " vs " + b.name());
}

}  // namespace valkit
