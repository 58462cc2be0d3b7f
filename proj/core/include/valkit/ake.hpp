#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valkit/formula.hpp"

namespace valkit {

struct AkeRow {
  Prime prime = 2;
  /// Truth in Z/p^n and in F_p[t]/(t^n); empty when the prime was skipped.
  std::optional<bool> zmod;
  std::optional<bool> trunc;
  std::string skipped_reason;

  bool evaluated() const { return zmod.has_value() && trunc.has_value(); }
};

struct AkeReport {
  std::string sentence;
  int n = 0;
  std::vector<AkeRow> rows;
  std::vector<Prime> disagreement;
  std::vector<Prime> skipped;
  /// Least listed prime from which every evaluated prime agrees.
  std::optional<Prime> agreement_from;
};

/// Evaluates the sentence in Z/p^n Z and F_p[t]/(t^n) for each prime, one
/// task per prime. Primes over budget are reported as skipped.
AkeReport ake_compare(const Sentence& sentence, int n, const std::vector<Prime>& primes,
                      std::uint64_t budget = kDefaultEvaluationBudget);

/// Primes in [lo, hi].
std::vector<Prime> primes_in_range(Prime lo, Prime hi);

}  // namespace valkit
