#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valkit/bigint.hpp"
#include "valkit/field.hpp"

namespace valkit {

enum class ExponentGroup { Integers, Rationals, IntegerPairs };

std::string to_string(ExponentGroup group);
ExponentGroup parse_exponent_group(const std::string& text);

/// Element of Z, Q or Z x Z (lexicographic). Single exponents keep minor = 0.
struct Exponent {
  Rational major = 0;
  Rational minor = 0;

  Exponent() = default;
  Exponent(std::int64_t m) : major(m) {}  // NOLINT(implicit)
  Exponent(Rational m) : major(std::move(m)) {}  // NOLINT(implicit)
  Exponent(Rational m, Rational n) : major(std::move(m)), minor(std::move(n)) {}

  bool operator==(const Exponent&) const = default;
  std::strong_ordering operator<=>(const Exponent& other) const;

  Exponent operator+(const Exponent& o) const { return {major + o.major, minor + o.minor}; }
  Exponent operator-(const Exponent& o) const { return {major - o.major, minor - o.minor}; }
  Exponent operator-() const { return {-major, -minor}; }
  Exponent scaled(std::int64_t n) const { return {major * n, minor * n}; }

  bool belongs_to(ExponentGroup group) const;
  std::string to_string(ExponentGroup group) const;
};

/// A truncated Hahn series Σ a_γ t^γ over Q or F_p: a finite support listed
/// in increasing order, plus an optional cap at and above which coefficients
/// are unknown. Without a cap the series is an exact finite sum.
class HahnSeries {
 public:
  using Term = std::pair<Exponent, Rational>;

  static HahnSeries zero(ExponentGroup group, const CoefficientField& field);
  static HahnSeries monomial(ExponentGroup group, const CoefficientField& field, const Rational& c,
                             const Exponent& e);
  /// Terms may repeat and contain zeros; terms at or above the cap are dropped.
  static HahnSeries from_terms(ExponentGroup group, const CoefficientField& field, std::vector<Term> terms,
                               std::optional<Exponent> cap = std::nullopt);
  static HahnSeries parse(std::string_view text, ExponentGroup group, const CoefficientField& field);

  ExponentGroup group() const { return group_; }
  const CoefficientField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Exponent>& cap() const { return cap_; }
  /// No known nonzero coefficient (the tail past the cap may still be unknown).
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return !cap_.has_value(); }

  /// Least exponent of the support; nullopt means v = ∞ (exact zero). Throws
  /// PrecisionLoss for a series with no known term but an unknown tail.
  std::optional<Exponent> valuation() const;
  /// Coefficient at v = 0, else 0 (also for v < 0).
  Rational residue() const;
  Rational angular_component() const;
  Rational coefficient(const Exponent& e) const;

  HahnSeries operator-() const;
  /// g = c t^γ (1 - f) with v(f) > 0, inverted as c^-1 t^-γ Σ f^n so that
  /// g * g^-1 = 1 below min(cap, cap(g) - γ); the result itself carries that
  /// cap shifted by -γ. Over Z x Z, where n v(f) need not pass the cap, the
  /// sum stops after `max_terms` and the cap drops to v(f^max_terms).
  HahnSeries inverse(const Exponent& cap, int max_terms = 48) const;

  std::string to_string() const;

  bool operator==(const HahnSeries&) const = default;

  friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);

 private:
  HahnSeries(ExponentGroup group, CoefficientField field) : group_(group), field_(field) {}

  ExponentGroup group_;
  CoefficientField field_;
  std::vector<Term> terms_;
  std::optional<Exponent> cap_;
};

std::ostream& operator<<(std::ostream& os, const HahnSeries& f);

/// Pairs (α, β) in A x B with α + β = γ, for sorted supports A and B, found
/// by a single merge walk.
std::vector<std::pair<Exponent, Exponent>> convolution_pairs(const std::vector<Exponent>& a,
                                                             const std::vector<Exponent>& b, const Exponent& gamma);

}  // namespace valkit
