#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "valkit/valkit.hpp"

namespace testgen {

using valkit::BigInt;
using valkit::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

  BigInt integer(std::int64_t bound) { return BigInt(range(-bound, bound)); }

  BigInt nonzero_integer(std::int64_t bound) {
    for (;;) {
      const auto k = range(-bound, bound);
      if (k != 0) return BigInt(k);
    }
  }

  Rational rational(std::int64_t bound) { return Rational(integer(bound), BigInt(range(1, bound))); }

  Rational nonzero_rational(std::int64_t bound) {
    return Rational(nonzero_integer(bound), BigInt(range(1, bound)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testgen
