#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "valkit/bigint.hpp"
#include "valkit/padic.hpp"
#include "valkit/poly.hpp"
#include "valkit/valuation.hpp"

namespace valkit {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct ZeroCount {
  std::size_t variables = 0;
  Prime prime = 2;
  /// N(f): zeros of f in F_p^n.
  std::uint64_t count = 0;
  /// Lexicographically least nonzero zero, first coordinate most significant.
  std::optional<std::vector<std::int64_t>> nontrivial_zero;
};

/// Exhaustive count over F_p^n. Throws DomainTooLarge when p^n > budget.
/// The enumeration is split by first coordinate across worker threads.
ZeroCount count_zeros_ff(const MultiPoly& f, Prime p, std::uint64_t budget = kDefaultEnumerationBudget);

struct ChevalleyReport {
  ZeroCount zeros;
  std::uint32_t degree = 0;
  /// Largest integer strictly below n/d.
  std::uint32_t exponent = 0;
  BigInt modulus;  // p^exponent
  bool divisible = false;
  bool has_constant_term = false;
  /// Meaningful only without a constant term.
  bool nontrivial_zero_found = false;

  bool holds() const { return divisible && (has_constant_term || nontrivial_zero_found); }
};

/// Counts zeros and checks p^a | N(f) for a the largest integer below n/d.
/// Throws HypothesisFailed unless n > d.
ChevalleyReport chevalley_warning_check(const MultiPoly& f, Prime p,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

struct PadicZeroCertificate {
  Prime prime = 2;
  /// Integers x_i with v(F(x)) >= precision.
  std::vector<BigInt> representatives;
  std::vector<PadicNumber> coordinates;
  std::int64_t precision = 0;
  std::size_t pivot = 0;
  /// v(dF/dx_pivot) at the starting vector; Newton divides it out.
  Valuation pivot_gradient_valuation;
  /// v(F(x)) at the returned vector; infinite for an exact zero.
  Valuation value_valuation;
  bool primitive = false;
};

struct ZeroSearchOptions {
  std::int64_t target_precision = 8;
  int depth_cap = 4;
  std::uint64_t budget = 10'000'000;
};

struct ZeroSearchResult {
  std::optional<PadicZeroCertificate> certificate;
  /// Refinement levels m searched in full, then those skipped by the budget.
  std::vector<int> levels_searched;
  std::vector<int> levels_skipped;
  std::uint64_t candidates = 0;
};

/// Looks for a nontrivial zero of F in Q_p. Candidates at level m are the
/// vectors mod p^m reducing to a nonzero zero mod p, taken residue zero by
/// residue zero in lexicographic order;
/// the first one where some coordinate satisfies v(F) > 2 v(dF/dx_i) is lifted
/// by Newton in that coordinate. No certificate means Unresolved, not
/// insoluble. Throws DomainTooLarge when even level 1 exceeds the budget.
ZeroSearchResult padic_zero_search(const Form& form, Prime p, const ZeroSearchOptions& options = {});

/// Newton in one coordinate from an integer vector, under
/// v(F(x)) > 2 v(dF/dx_pivot(x)). Without a pivot, the coordinate of least
/// gradient valuation is used. Throws HypothesisFailed when the condition
/// fails.
PadicZeroCertificate lift_candidate(const MultiPoly& poly, Prime p, const std::vector<BigInt>& start,
                                    std::int64_t precision, std::optional<std::size_t> pivot = std::nullopt);

/// Lifts a zero mod p with some partial derivative nonzero mod p to a zero
/// mod p^precision. Throws SingularResidueZero when the gradient vanishes.
PadicZeroCertificate lift_residue_zero(const MultiPoly& poly, Prime p, const std::vector<std::int64_t>& residue_zero,
                                       std::int64_t precision);

/// Re-evaluates F at the representatives with big integers.
bool verify_certificate(const MultiPoly& poly, const PadicZeroCertificate& certificate);

/// G(x, y, z) = x^4 + y^4 + z^4 - (x^2 y^2 + x^2 z^2 + y^2 z^2) - xyz(x + y + z).
Form terjanian_G();
/// G(x1..x3) + G(x4..x6) + G(x7..x9) + 4 (G(x10..x12) + G(x13..x15) + G(x16..x18)).
Form terjanian_F();

struct TerjanianLemmas {
  /// Triples in {0..3}^3 that are not all even, and how many have G ≡ 1 mod 4.
  int odd_cases = 0;
  int odd_cases_passing = 0;
  /// All-even triples, and how many have G ≡ 0 mod 16.
  int even_cases = 0;
  int even_cases_passing = 0;
  /// G(2a, 2b, 2c) = 16 G(a, b, c) checked on the same 64 triples.
  int scaling_cases_passing = 0;
  bool homogeneous_degree_four = false;

  bool passed() const {
    return odd_cases == 56 && odd_cases_passing == 56 && even_cases == 8 && even_cases_passing == 8 &&
           scaling_cases_passing == 64 && homogeneous_degree_four;
  }
};

TerjanianLemmas terjanian_lemmas();

struct TerjanianRejection {
  /// Halvings of the whole vector before an obstruction appears.
  int descent_steps = 0;
  /// 1: F ≡ k mod 4 from blocks 1-3; 2: F ≡ 4k mod 16 from blocks 4-6.
  int stage = 0;
  /// Blocks that are not all even in the deciding stage.
  int odd_blocks = 0;
  /// Exact v_2(F(x)) = 4 * descent_steps + {0, 1, 2, 3}.
  std::int64_t valuation = 0;
};

/// Proves F(x) != 0 for x in Z_2^18 known modulo 2^precision, by reading the
/// mod-4 obstruction after halving x until some block is not all even.
/// Throws PrecisionLoss when x is too close to 0 for the precision given.
TerjanianRejection terjanian_reject(const std::vector<BigInt>& x, std::int64_t precision);

}  // namespace valkit
