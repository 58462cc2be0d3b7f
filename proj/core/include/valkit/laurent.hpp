#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valkit/bigint.hpp"
#include "valkit/field.hpp"
#include "valkit/padic.hpp"
#include "valkit/valuation.hpp"

namespace valkit {

/// A formal Laurent series over Q or F_p,
///
///     c_v t^v + c_{v+1} t^{v+1} + ... + O(t^{v+k}),  c_v != 0,
///
/// with relative precision k, or an exact Laurent polynomial (no O-term).
/// Precision propagates exactly as for PadicNumber; exact operands never
/// lose information.
class LaurentSeries {
 public:
  static LaurentSeries zero(const CoefficientField& field);
  static LaurentSeries constant(const CoefficientField& field, const Rational& c);
  static LaurentSeries monomial(const CoefficientField& field, const Rational& c, std::int64_t exponent);

  /// Terms may repeat exponents and contain zeros; they are merged. When
  /// `absolute_cap` is given, coefficients at exponents >= cap are unknown and
  /// dropped; a window with no surviving term throws PrecisionLoss.
  static LaurentSeries from_terms(const CoefficientField& field,
                                  const std::vector<std::pair<std::int64_t, Rational>>& terms,
                                  std::optional<std::int64_t> absolute_cap = std::nullopt);

  /// Dense coefficients starting at exponent `offset`; the window length is
  /// the trusted width, so the result is truncated at offset + size.
  static LaurentSeries truncated(const CoefficientField& field, std::int64_t offset,
                                 const std::vector<Rational>& coefficients);

  static LaurentSeries parse(std::string_view text, const CoefficientField& field);

  const CoefficientField& field() const { return field_; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_exact() const { return !precision_.has_value(); }
  Valuation valuation() const;

  /// Relative precision, or nullopt when exact.
  std::optional<std::int64_t> precision() const { return precision_; }
  /// v + k, or nullopt when exact (including the exact zero).
  std::optional<std::int64_t> absolute_precision() const;

  /// Coefficient of t^e; throws PrecisionLoss when e lies beyond the window.
  Rational coefficient(std::int64_t exponent) const;
  /// Coefficients starting at t^v (dense, nonzero leading entry).
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational residue() const;
  Rational angular_component() const;

  LaurentSeries operator-() const;
  /// Inverse via c t^γ (1 - f) with v(f) > 0 and the Neumann sum Σ f^n.
  /// `precision` bounds the relative precision of exact inputs.
  LaurentSeries inverse(std::int64_t precision = kDefaultPrecision) const;
  LaurentSeries pow(std::int64_t exponent, std::int64_t precision = kDefaultPrecision) const;
  LaurentSeries with_precision(std::int64_t precision) const;

  bool agrees_with(const LaurentSeries& other) const;

  std::string to_string() const;

  bool operator==(const LaurentSeries&) const = default;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

 private:
  LaurentSeries(CoefficientField field, std::int64_t valuation, std::vector<Rational> coefficients,
                std::optional<std::int64_t> precision)
      : field_(field), valuation_(valuation), coefficients_(std::move(coefficients)), precision_(precision) {}

  CoefficientField field_;
  std::int64_t valuation_ = 0;
  std::vector<Rational> coefficients_;
  std::optional<std::int64_t> precision_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& x);

}  // namespace valkit
