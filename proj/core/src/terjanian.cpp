#include <algorithm>

#include "valkit/error.hpp"
#include "valkit/forms.hpp"
#include "valkit/poly_parse.hpp"

namespace valkit {

namespace {

constexpr const char* kG = "x^4 + y^4 + z^4 - (x^2*y^2 + x^2*z^2 + y^2*z^2) - x*y*z*(x + y + z)";

BigInt evaluate_G(const BigInt& x, const BigInt& y, const BigInt& z) {
  return x * x * x * x + y * y * y * y + z * z * z * z - (x * x * y * y + x * x * z * z + y * y * z * z) -
         x * y * z * (x + y + z);
}

}  // namespace

Form terjanian_G() { return parse_form(kG, std::vector<std::string>{"x", "y", "z"}); }

Form terjanian_F() {
  const MultiPoly g = terjanian_G().poly();
  MultiPoly f(18);
  for (std::size_t block = 0; block < 6; ++block) {
    // Embed G(x, y, z) into coordinates 3*block .. 3*block + 2.
    MultiPoly embedded(18);
    for (const auto& [e, c] : g.terms()) {
      Exponents wide(18, 0);
      std::copy(e.begin(), e.end(), wide.begin() + static_cast<std::ptrdiff_t>(3 * block));
      embedded = embedded + MultiPoly(18, {{wide, block < 3 ? c : 4 * c}});
    }
    f = f + embedded;
  }
  return Form(std::move(f));
}

TerjanianLemmas terjanian_lemmas() {
  TerjanianLemmas out;
  const Form g = terjanian_G();
  out.homogeneous_degree_four = g.degree() == 4 && g.poly().is_homogeneous();
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        const std::vector<BigInt> point{x, y, z};
        const BigInt value = g.evaluate(point);
        if (value != evaluate_G(x, y, z)) fail(ErrorKind::InvalidArgument, "G disagrees with its printed formula");
        const bool all_even = x % 2 == 0 && y % 2 == 0 && z % 2 == 0;
        if (all_even) {
          ++out.even_cases;
          if (floor_mod(value, 16) == 0) ++out.even_cases_passing;
        } else {
          ++out.odd_cases;
          if (floor_mod(value, 4) == 1) ++out.odd_cases_passing;
        }
        const std::vector<BigInt> doubled{2 * x, 2 * y, 2 * z};
        if (g.evaluate(doubled) == 16 * value) ++out.scaling_cases_passing;
      }
    }
  }
  return out;
}

TerjanianRejection terjanian_reject(const std::vector<BigInt>& x, std::int64_t precision) {
  if (x.size() != 18) fail(ErrorKind::ArityMismatch, "Terjanian's form has 18 variables");
  if (precision < 2) fail(ErrorKind::InvalidArgument, "precision must be at least 2");
  const BigInt modulus = prime_power(2, precision);
  std::vector<BigInt> y;
  for (const auto& c : x) y.push_back(floor_mod(c, modulus));
  if (std::all_of(y.begin(), y.end(), [](const BigInt& c) { return c == 0; })) {
    fail(ErrorKind::PrecisionLoss, "vector vanishes at the given precision");
  }

  auto odd_blocks = [&](std::size_t first) {
    int k = 0;
    for (std::size_t b = first; b < first + 3; ++b) {
      if (y[3 * b] % 2 != 0 || y[3 * b + 1] % 2 != 0 || y[3 * b + 2] % 2 != 0) ++k;
    }
    return k;
  };

  TerjanianRejection out;
  // y is known modulo 2^known; each halving costs one digit, and the blocks
  // must be known mod 4 to read G mod 4.
  std::int64_t known = precision;
  while (true) {
    if (known < 2) fail(ErrorKind::PrecisionLoss, "ran out of digits during descent");
    if (int k = odd_blocks(0); k > 0) {
      // Blocks 1-3 give F ≡ k mod 4.
      out.stage = 1;
      out.odd_blocks = k;
      out.valuation = 4 * out.descent_steps + (k == 2 ? 1 : 0);
      return out;
    }
    if (int k = odd_blocks(3); k > 0) {
      // Blocks 1-3 are all even, so F ≡ 4k mod 16.
      out.stage = 2;
      out.odd_blocks = k;
      out.valuation = 4 * out.descent_steps + (k == 2 ? 3 : 2);
      return out;
    }
    for (auto& c : y) c /= 2;
    --known;
    ++out.descent_steps;
  }
}

}  // namespace valkit
