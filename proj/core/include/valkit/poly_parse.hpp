#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valkit/poly.hpp"

namespace valkit {

struct ParsedPolynomial {
  MultiPoly poly;
  std::vector<std::string> variables;
};

/// Parses integer polynomials such as `x1^4 + x2^4 - x1^2*x2^2` or
/// `3*(x - y)^2 + 1`. Multiplication must be written with `*`.
///
/// Without explicit `variables`, names of the form x1, x2, ... are placed by
/// their index (x3 alone gives three variables); any other set of names is
/// sorted alphabetically.
ParsedPolynomial parse_polynomial(std::string_view text,
                                  const std::optional<std::vector<std::string>>& variables = std::nullopt);

/// A polynomial in at most one variable, whatever its name.
UniPoly parse_univariate(std::string_view text, Ring ring = Ring::integers());

Form parse_form(std::string_view text, const std::optional<std::vector<std::string>>& variables = std::nullopt);

}  // namespace valkit
