#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "valkit/bigint.hpp"
#include "valkit/valuation.hpp"

namespace valkit {

inline constexpr int kDefaultPrecision = 32;

/// A truncated element of Q_p in canonical unit-part form
///
///     x = p^v * (d0 + d1 p + ... + d_{k-1} p^{k-1} + O(p^k)),  d0 != 0,
///
/// where k is the relative precision (number of trusted unit digits). Zero is
/// exact: it has infinite valuation, no digits, and absorbs nothing.
///
/// Arithmetic follows the relative-precision model: products keep the smaller
/// relative precision; a sum is known modulo the smaller absolute precision
/// p^(v+k) of its operands and loses one digit for every cancelled leading
/// digit. A sum whose whole trusted window cancels throws PrecisionLoss rather
/// than reporting a valuation it cannot justify.
class PadicNumber {
 public:
  static PadicNumber zero(Prime p);
  static PadicNumber from_integer(const BigInt& n, Prime p, int precision = kDefaultPrecision);
  static PadicNumber from_rational(const BigInt& num, const BigInt& den, Prime p,
                                   int precision = kDefaultPrecision);
  static PadicNumber from_rational(const Rational& r, Prime p, int precision = kDefaultPrecision);

  /// The element known only modulo p^absolute_precision. Throws PrecisionLoss
  /// when `value` vanishes at that precision.
  static PadicNumber from_residue_class(const BigInt& value, Prime p, std::int64_t absolute_precision);

  /// p^valuation * unit, unit coprime to p, trusted to `precision` digits.
  static PadicNumber from_unit(Prime p, std::int64_t valuation, const BigInt& unit, int precision);

  /// Digits are normalised: leading zeros move into the valuation.
  static PadicNumber from_digits(Prime p, std::int64_t valuation, std::vector<std::int64_t> digits);

  /// Inverse of to_string(). The rendering of zero carries no prime, so
  /// `prime` is required for it and must match any prime in the text.
  static PadicNumber parse(std::string_view text, std::optional<Prime> prime = std::nullopt);

  Prime prime() const { return prime_; }
  bool is_zero() const { return digits_.empty(); }
  Valuation valuation() const;
  const std::vector<std::int64_t>& unit_digits() const { return digits_; }

  /// Relative precision; 0 for the exact zero.
  int precision() const { return static_cast<int>(digits_.size()); }
  /// v + k, or nullopt for the exact zero.
  std::optional<std::int64_t> absolute_precision() const;

  /// Integer Σ d_i p^i in [0, p^k).
  BigInt unit() const;
  /// p^v * unit(), defined only for v >= 0; congruent to x mod p^(v+k).
  BigInt representative() const;
  Rational to_rational() const;

  bool is_integral() const { return is_zero() || valuation_ >= 0; }
  bool in_maximal_ideal() const { return is_zero() || valuation_ > 0; }

  /// Image in F_p: leading digit when v = 0, zero otherwise (also for v < 0).
  std::int64_t residue() const;
  /// Leading unit digit, or 0 for zero.
  std::int64_t angular_component() const;

  PadicNumber operator-() const;
  PadicNumber inverse() const;
  PadicNumber pow(std::uint64_t exponent) const;
  PadicNumber with_precision(int precision) const;

  /// Same element at the smaller of the two precisions.
  bool agrees_with(const PadicNumber& other) const;

  std::string to_string() const;

  bool operator==(const PadicNumber&) const = default;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

 private:
  PadicNumber(Prime p, std::int64_t valuation, std::vector<std::int64_t> digits)
      : prime_(p), valuation_(valuation), digits_(std::move(digits)) {}

  Prime prime_ = 2;
  std::int64_t valuation_ = 0;
  std::vector<std::int64_t> digits_;
};

std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

void require_same_prime(const PadicNumber& a, const PadicNumber& b);

/// Base-p digits of n in [0, p^count), least significant first.
std::vector<std::int64_t> base_p_digits(const BigInt& n, Prime p, std::size_t count);

}  // namespace valkit
