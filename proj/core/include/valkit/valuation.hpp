#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace valkit {

/// An element of Z ∪ {∞}. Infinity absorbs addition and sits above every
/// finite value; there is no negative infinity.
class Valuation {
 public:
  constexpr Valuation() = default;  // infinity
  constexpr Valuation(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  std::int64_t value() const;

  constexpr Valuation operator+(const Valuation& other) const {
    if (is_infinite() || other.is_infinite()) return {};
    return Valuation(*value_ + *other.value_);
  }

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& other) const {
    if (is_infinite()) {
      return other.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    }
    if (other.is_infinite()) return std::strong_ordering::less;
    return *value_ <=> *other.value_;
  }

  std::string to_string() const;

 private:
  std::optional<std::int64_t> value_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace valkit
