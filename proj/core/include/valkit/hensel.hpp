#pragma once

#include <cstdint>
#include <optional>

#include "valkit/bigint.hpp"
#include "valkit/laurent.hpp"
#include "valkit/padic.hpp"
#include "valkit/poly.hpp"

namespace valkit {

struct LiftResult {
  PadicNumber root;
  /// P(representative) ≡ 0 mod p^achieved_precision.
  std::int64_t achieved_precision = 0;
  std::int64_t residue_seed = 0;
  /// Integer in [0, p^achieved_precision) congruent to the root.
  BigInt representative;
};

struct NewtonStep {
  BigInt root;
  /// e = v(P'(x0)); the root is determined modulo p^(target - e).
  std::int64_t derivative_valuation = 0;
  int iterations = 0;
};

/// Newton iteration for an integer polynomial from an approximate root x0
/// with v(P(x0)) > 2 v(P'(x0)). Each step divides P(x) and P'(x) by p^e and
/// inverts the unit quotient modulo p^target. Returns x in [0, p^target) with
/// P(x) ≡ 0 mod p^target and v(x - x0) >= v(P(x0)) - e. Throws
/// HypothesisFailed when the inequality does not hold at x0.
NewtonStep newton_lift(const UniPoly& poly, const BigInt& x0, Prime p, std::int64_t target);

/// Lifts a simple residue root: P(seed) ≡ 0 and P'(seed) ≢ 0 mod p.
/// Throws NotASimpleRoot otherwise.
LiftResult simple_zero_lift(const UniPoly& poly, Prime p, std::int64_t seed, std::int64_t precision);

/// Root a near 0 under v(P(0)) > 2 v(P'(0)), with v(a) = v(P(0)) - v(P'(0)).
/// Precision is raised to v(P(0)) + 1 if needed so the valuation is visible.
LiftResult strong_zero_lift(const UniPoly& poly, Prime p, std::int64_t precision);

/// a with a^n = 1 + b and v(a - 1) = v(b), for v(b) >= 1 and p ∤ n.
PadicNumber nth_root_one_plus(const PadicNumber& b, std::uint32_t n, int precision = kDefaultPrecision);

/// a with a^n = x and v(a) = v(x)/n: split off p^(v/n) and a residue root c,
/// then take the n-th root of the remaining 1 + b. The residue root chosen is
/// the least one in [1, p).
PadicNumber nth_root_with_valuation(const PadicNumber& x, std::uint32_t n, int precision = kDefaultPrecision);

/// Same for Laurent series over Q or F_p; over Q the leading coefficient must
/// be an exact rational n-th power.
LaurentSeries nth_root_with_valuation(const LaurentSeries& x, std::uint32_t n,
                                      std::int64_t precision = kDefaultPrecision);

/// Whether x is an n-th power in Q_p. Decided by n | v(x), an n-th root of the
/// residue, and Hensel when p ∤ n; squares in Q_2 use the unit part mod 8.
/// Other cases with p | n throw ResidueObstruction.
bool is_nth_power(const PadicNumber& x, std::uint32_t n);
bool is_square(const PadicNumber& x);

struct DefinabilityResult {
  /// Whether z = 1 + p a^2 is a square (odd p), or z = 1 + 2 a^3 a cube (p = 2).
  bool claimed = false;
  /// v(a) >= 0.
  bool ground_truth = false;
  std::uint32_t exponent = 2;
  PadicNumber z = PadicNumber::zero(2);
  std::optional<PadicNumber> witness;
};

/// Decides membership of a in Z_p through the existential formula
/// "exists y. 1 + p a^2 = y^2" (cubes and 1 + 2 a^3 when p = 2).
DefinabilityResult zp_membership_via_definability(const PadicNumber& a);

}  // namespace valkit
