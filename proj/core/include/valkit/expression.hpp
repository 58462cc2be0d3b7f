#pragma once

#include <string_view>

#include "valkit/bigint.hpp"
#include "valkit/field.hpp"
#include "valkit/laurent.hpp"
#include "valkit/padic.hpp"

namespace valkit {

/// Exact value of an arithmetic expression over Q: integers, `+ - * /`,
/// integer powers `^` (negative allowed) and parentheses.
Rational evaluate_rational_expression(std::string_view text);

/// Evaluates over Q exactly, then expands in Q_p with `precision` unit digits.
PadicNumber evaluate_padic_expression(std::string_view text, Prime p, int precision = kDefaultPrecision);

/// Same grammar with the variable `t`; polynomial subexpressions stay exact,
/// division truncates at `precision` relative digits.
LaurentSeries evaluate_series_expression(std::string_view text, const CoefficientField& field,
                                         std::int64_t precision = kDefaultPrecision);

}  // namespace valkit
