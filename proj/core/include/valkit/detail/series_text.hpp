#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valkit/bigint.hpp"

namespace valkit::detail {

/// Exponent as written in series text: an integer, a rational `(a/b)`, or a
/// lexicographic pair `(a,b)`.
struct TextExponent {
  Rational major = 0;
  Rational minor = 0;
  bool is_pair = false;
};

struct TextTerm {
  Rational coefficient;
  TextExponent exponent;
};

struct SeriesText {
  std::vector<TextTerm> terms;
  std::optional<TextExponent> cap;  // from a trailing O(t^e)
};

/// Parses `3*t^(-1/2) + 1 - t + O(t^5)`; repeated exponents are kept as
/// separate terms for the caller to merge.
SeriesText parse_series_text(std::string_view text);

std::string render_exponent(const TextExponent& e);

/// Joins (coefficient, exponent) pairs as `c*t^e + ...`, with an optional
/// `O(t^cap)` tail; an empty term list renders as `0`.
std::string render_series(const std::vector<TextTerm>& terms, const std::optional<TextExponent>& cap);

}  // namespace valkit::detail
