#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valkit/error.hpp"
#include "valkit/laurent.hpp"
#include "valkit/padic.hpp"
#include "valkit/poly.hpp"
#include "valkit/valuation.hpp"

namespace valkit {

template <class T>
concept ValuedElement = requires(const T& a, const T& b) {
  { a - b } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a.valuation() } -> std::convertible_to<Valuation>;
  { a == b } -> std::convertible_to<bool>;
};

/// The integer n in the parent of `like`, at its precision.
inline PadicNumber valued_constant(const PadicNumber& like, const BigInt& n) {
  return PadicNumber::from_integer(n, like.prime(), like.is_zero() ? kDefaultPrecision : like.precision());
}
inline LaurentSeries valued_constant(const LaurentSeries& like, const BigInt& n) {
  return LaurentSeries::constant(like.field(), Rational(n));
}

/// v(a - b). Identical entries are taken to be equal, so their difference has
/// valuation ∞ even when both are truncated.
template <ValuedElement T>
Valuation difference_valuation(const T& a, const T& b) {
  if (a == b) return Valuation::infinity();
  return (a - b).valuation();
}

/// Finite window a_0 ... a_{m-1} of a sequence; the properties are asked from
/// index tail_index on (inclusive).
template <ValuedElement T>
struct SequencePrefix {
  std::vector<T> values;
  std::size_t tail_index = 0;

  void validate() const {
    if (values.size() < tail_index + 3) {
      fail(ErrorKind::InvalidArgument, "a prefix needs at least tail_index + 3 terms");
    }
  }
};

struct PcVerdict {
  bool holds = false;
  /// First (j1, j2, j3) in lexicographic order with v(a_j3 - a_j2) <= v(a_j2 - a_j1).
  std::optional<std::array<std::size_t, 3>> violation;
};

/// v(a_j3 - a_j2) > v(a_j2 - a_j1) for all tail_index <= j1 < j2 < j3.
template <ValuedElement T>
PcVerdict is_pc_prefix(const SequencePrefix<T>& s) {
  s.validate();
  const std::size_t m = s.values.size();
  std::vector<std::vector<Valuation>> v(m, std::vector<Valuation>(m));
  for (std::size_t i = s.tail_index; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) v[i][j] = difference_valuation(s.values[j], s.values[i]);
  for (std::size_t j1 = s.tail_index; j1 < m; ++j1)
    for (std::size_t j2 = j1 + 1; j2 < m; ++j2)
      for (std::size_t j3 = j2 + 1; j3 < m; ++j3)
        if (!(v[j2][j3] > v[j1][j2])) return {false, std::array<std::size_t, 3>{j1, j2, j3}};
  return {true, std::nullopt};
}

/// v(a_i - a) strictly increasing for i >= tail_index.
template <ValuedElement T>
bool is_pseudolimit_prefix(const SequencePrefix<T>& s, const T& a) {
  s.validate();
  std::optional<Valuation> previous;
  for (std::size_t i = s.tail_index; i < s.values.size(); ++i) {
    const Valuation v = difference_valuation(s.values[i], a);
    if (previous && !(v > *previous)) return false;
    previous = v;
  }
  return true;
}

/// α_i = v(a_{i+1} - a_i) for tail_index <= i < m - 1.
template <ValuedElement T>
std::vector<Valuation> pc_alphas(const SequencePrefix<T>& s) {
  std::vector<Valuation> out;
  for (std::size_t i = s.tail_index; i + 1 < s.values.size(); ++i)
    out.push_back(difference_valuation(s.values[i + 1], s.values[i]));
  return out;
}

enum class ValuationPattern { EventuallyConstant, EventuallyStrictlyIncreasing, Inconclusive };

inline std::string to_string(ValuationPattern pattern) {
  switch (pattern) {
    case ValuationPattern::EventuallyConstant: return "eventually-constant";
    case ValuationPattern::EventuallyStrictlyIncreasing: return "eventually-strictly-increasing";
    case ValuationPattern::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// Classifies v(a_i), i >= tail_index, by its longest constant or strictly
/// increasing suffix; a lobe counts once it spans three observed terms.
template <ValuedElement T>
ValuationPattern valuation_pattern(const SequencePrefix<T>& s) {
  std::vector<Valuation> v;
  for (std::size_t i = s.tail_index; i < s.values.size(); ++i) v.push_back(s.values[i].valuation());
  if (v.size() < 3) return ValuationPattern::Inconclusive;
  std::size_t constant = 1, increasing = 1;
  for (std::size_t i = v.size() - 1; i > 0 && v[i - 1] == v[i]; --i) ++constant;
  for (std::size_t i = v.size() - 1; i > 0 && v[i - 1] < v[i]; --i) ++increasing;
  if (constant >= 3) return ValuationPattern::EventuallyConstant;
  if (increasing >= 3) return ValuationPattern::EventuallyStrictlyIncreasing;
  return ValuationPattern::Inconclusive;
}

struct ContinuityReport {
  bool holds = false;
  /// Least index from which v(P(a_i) - P(a)) increases strictly to the end.
  std::size_t shift = 0;
  /// v(P(a_i) - P(a)) for i >= tail_index.
  std::vector<Valuation> valuations;
};

/// Checks (P(a_i)) ⇝ P(a) on the window. P(a_i) - P(a) is expanded as
/// Σ_{k>=1} P_k(a) (a_i - a)^k with the Taylor coefficients P_k, so the two
/// nearby values are never subtracted. The verdict holds when the increasing
/// tail starting at `shift` still has at least three terms.
template <ValuedElement T>
ContinuityReport polynomial_continuity_check(const SequencePrefix<T>& s, const T& a, const UniPoly& p) {
  s.validate();
  if (!p.degree() || *p.degree() == 0) fail(ErrorKind::InvalidArgument, "continuity check needs a nonconstant P");
  const auto parts = taylor_coefficients(p);
  // P(a_i) - P(a) = Σ_{k>=1} P_k(a) (a_i - a)^k; slot 0 is unused.
  std::vector<T> at_a{valued_constant(a, 0)};
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& q = parts[k];
    T acc = valued_constant(a, 0);
    const auto& cs = q.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * a + valued_constant(a, *it);
    at_a.push_back(acc);
  }
  ContinuityReport report;
  for (std::size_t i = s.tail_index; i < s.values.size(); ++i) {
    if (s.values[i] == a) {
      report.valuations.push_back(Valuation::infinity());
      continue;
    }
    const T d = s.values[i] - a;
    T power = d;
    T total = valued_constant(a, 0);
    for (std::size_t k = 1; k < at_a.size(); ++k) {
      total = total + at_a[k] * power;
      power = power * d;
    }
    report.valuations.push_back(total.valuation());
  }
  std::size_t start = report.valuations.size() - 1;
  while (start > 0 && report.valuations[start - 1] < report.valuations[start]) --start;
  report.shift = s.tail_index + start;
  report.holds = report.valuations.size() - start >= 3;
  return report;
}

}  // namespace valkit
