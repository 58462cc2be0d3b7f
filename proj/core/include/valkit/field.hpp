#pragma once

#include <cstdint>
#include <string>

#include "valkit/bigint.hpp"

namespace valkit {

/// Coefficient field for series: either Q or a prime field F_p. Elements are
/// carried as rationals; over F_p they are kept as integers in [0, p).
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  static CoefficientField prime_field(Prime p);

  /// "Q" or a decimal prime.
  static CoefficientField parse(const std::string& text);

  Prime characteristic() const { return characteristic_; }
  bool is_rationals() const { return characteristic_ == 0; }

  Rational normalize(const Rational& x) const;
  Rational from_integer(const BigInt& n) const { return normalize(Rational(n)); }

  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational inv(const Rational& a) const;

  std::string name() const;

  bool operator==(const CoefficientField&) const = default;

 private:
  explicit CoefficientField(Prime characteristic) : characteristic_(characteristic) {}

  Prime characteristic_;
};

void require_same_field(const CoefficientField& a, const CoefficientField& b);

}  // namespace valkit
