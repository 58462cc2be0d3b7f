#include <doctest.h>

#include <functional>
#include <set>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "valkit/valkit.hpp"

using namespace valkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("hensel") {
  TEST_CASE("square root of 2 in Z_7") {
    const auto p = parse_univariate("x^2 - 2");
    CHECK(simple_zero_lift(p, 7, 3, 2).representative == 10);
    const auto r3 = simple_zero_lift(p, 7, 3, 3);
    CHECK(r3.representative == 108);
    CHECK(oracle::mod(BigInt(108) * 108, 343) == 2);
    CHECK(r3.root.residue() == 3);
    CHECK(r3.residue_seed == 3);
    const auto r10 = simple_zero_lift(p, 7, 3, 10);
    CHECK(oracle::mod(r10.representative * r10.representative - 2, oracle::power(7, 10)) == 0);
  }

  TEST_CASE("linear polynomial lifts to its root") {
    const auto p = parse_univariate("x - 12");
    CHECK(simple_zero_lift(p, 5, 2, 4).representative == 12);
  }

  TEST_CASE("seed that is not a simple root") {
    const auto p = parse_univariate("x^2 - 2");
    CHECK(kind_of([&] { (void)simple_zero_lift(p, 7, 1, 4); }) == ErrorKind::NotASimpleRoot);
    CHECK(kind_of([&] { (void)simple_zero_lift(parse_univariate("x^2"), 5, 0, 4); }) == ErrorKind::NotASimpleRoot);
  }

  TEST_CASE("strong lift of x^2 + x + 7 at 7") {
    const auto p = parse_univariate("x^2 + x + 7");
    const auto r = strong_zero_lift(p, 7, 6);
    CHECK(oracle::mod(r.representative, 49) == 42);
    CHECK(r.root.valuation() == Valuation(1));
    CHECK(oracle::mod(p.evaluate(r.representative), oracle::power(7, 6)) == 0);
  }

  TEST_CASE("strong lift of x - p") {
    const auto r = strong_zero_lift(parse_univariate("x - 5"), 5, 4);
    CHECK(r.representative == 5);
    CHECK(r.root.valuation() == Valuation(1));
  }

  TEST_CASE("strong lift hypothesis") {
    CHECK(kind_of([] { (void)strong_zero_lift(parse_univariate("x^2 + 9*x + 27"), 3, 6); }) ==
          ErrorKind::HypothesisFailed);
    CHECK(kind_of([] { (void)strong_zero_lift(parse_univariate("x^2 - 9"), 3, 6); }) ==
          ErrorKind::HypothesisFailed);
  }

  TEST_CASE("both Hensel formulations agree after shifting by the seed") {
    testgen::Rng rng(17);
    const std::vector<Prime> primes{3, 5, 7, 11};
    int compared = 0;
    for (int trial = 0; trial < 300 && compared < 100; ++trial) {
      const Prime p = rng.pick(primes);
      std::vector<BigInt> cs;
      for (int i = 0; i < 4; ++i) cs.push_back(rng.integer(40));
      const UniPoly poly(cs);
      for (std::int64_t seed = 0; seed < p; ++seed) {
        const auto [value, slope] = poly.evaluate_with_derivative(seed);
        if (value % p != 0 || slope % p == 0) continue;
        const auto simple = simple_zero_lift(poly, p, seed, 8);
        const UniPoly shifted = poly.shift(seed);
        CHECK(p_adic_order(slope, p) == 0);
        if (shifted.coefficient(0) == 0) continue;
        CHECK(p_adic_order(shifted.coefficient(0), p) > 0);
        const auto strong = strong_zero_lift(shifted, p, 8);
        CHECK(oracle::mod(strong.representative + seed - simple.representative, oracle::power(p, 8)) == 0);
        ++compared;
      }
    }
    CHECK(compared >= 50);
  }

  TEST_CASE("cube root of 8 near 1 in Z_7") {
    const auto a = nth_root_one_plus(PadicNumber::from_integer(7, 7, 6), 3, 6);
    CHECK(oracle::mod(a.representative(), 49) == 36);
    CHECK((a - PadicNumber::from_integer(1, 7, 6)).valuation() == Valuation(1));
    CHECK(nth_root_one_plus(PadicNumber::zero(7), 3, 6) == PadicNumber::from_integer(1, 7, 6));
    const auto s = nth_root_one_plus(PadicNumber::from_integer(5, 5, 10), 2, 10);
    CHECK(oracle::mod(s.representative() * s.representative() - 6, oracle::power(5, 10)) == 0);
    CHECK(s.residue() == 1);
    CHECK(kind_of([] { (void)nth_root_one_plus(PadicNumber::from_integer(5, 5), 5); }) ==
          ErrorKind::ResidueObstruction);
  }

  TEST_CASE("n-th roots with prescribed valuation") {
    const auto a = nth_root_with_valuation(PadicNumber::from_integer(9 * 49, 7, 10), 2, 10);
    CHECK(a.representative() == 21);
    CHECK(a.valuation() == Valuation(1));
    CHECK(kind_of([] { (void)nth_root_with_valuation(PadicNumber::from_integer(3, 7), 2); }) ==
          ErrorKind::NotAnNthPower);
    CHECK(kind_of([] { (void)nth_root_with_valuation(PadicNumber::from_integer(7, 7), 2); }) ==
          ErrorKind::ValuationNotDivisible);
  }

  TEST_CASE("square root of 4t^2 over F_5") {
    const auto f5 = CoefficientField::prime_field(5);
    const auto x = LaurentSeries::monomial(f5, 4, 2);
    const auto a = nth_root_with_valuation(x, 2, 8);
    CHECK(a.valuation() == Valuation(1));
    const auto c = a.angular_component();
    CHECK((c == 2 || c == 3));
    CHECK((a * a).agrees_with(x));
  }

  TEST_CASE("roots verify by powering") {
    testgen::Rng rng(23);
    const std::vector<Prime> primes{3, 5, 7, 11, 13};
    for (int trial = 0; trial < 200; ++trial) {
      const Prime p = rng.pick(primes);
      const auto n = static_cast<std::uint32_t>(rng.range(2, 5));
      if (p % n == 0) continue;
      const auto base = PadicNumber::from_rational(rng.nonzero_rational(60), p, 12);
      const auto x = base.pow(n);
      const auto a = nth_root_with_valuation(x, n, 12);
      CHECK(a.pow(n).agrees_with(x));
      CHECK(a.valuation().value() * n == x.valuation().value());
    }
  }

  TEST_CASE("2-adic squares match exhaustive squaring mod 2^k") {
    for (std::int64_t k = 3; k <= 10; ++k) {
      const std::int64_t m = std::int64_t{1} << k;
      std::set<std::int64_t> squares;
      for (std::int64_t y = 0; y < m; ++y) squares.insert(y * y % m);
      for (std::int64_t u = 1; u < m; u += 2) {
        const auto x = PadicNumber::from_integer(u, 2, static_cast<int>(k));
        CHECK(is_square(x) == squares.count(u) > 0);
        const auto y = PadicNumber::from_integer(4 * u, 2, static_cast<int>(k));
        CHECK(is_square(y) == squares.count(u) > 0);
        CHECK_FALSE(is_square(PadicNumber::from_integer(2 * u, 2, static_cast<int>(k))));
      }
    }
    CHECK(kind_of([] { (void)is_square(PadicNumber::from_integer(1, 2, 2)); }) == ErrorKind::PrecisionLoss);
  }

  TEST_CASE("odd-prime squares follow the residue table") {
    CHECK(is_square(PadicNumber::from_integer(2, 7)));
    CHECK_FALSE(is_square(PadicNumber::from_integer(3, 7)));
    CHECK(is_square(PadicNumber::from_integer(2 * 49, 7)));
    CHECK_FALSE(is_square(PadicNumber::from_integer(2 * 7, 7)));
  }

  TEST_CASE("definability examples") {
    const auto r1 = zp_membership_via_definability(PadicNumber::from_rational(Rational(1, 5), 5));
    CHECK_FALSE(r1.claimed);
    CHECK_FALSE(r1.ground_truth);
    const auto r2 = zp_membership_via_definability(PadicNumber::from_integer(2, 5));
    CHECK(r2.claimed);
    CHECK(r2.ground_truth);
    REQUIRE(r2.witness.has_value());
    CHECK((r2.witness->pow(2)).agrees_with(r2.z));
    const auto r3 = zp_membership_via_definability(PadicNumber::from_integer(1, 2));
    CHECK(r3.exponent == 3);
    CHECK(r3.claimed);
    CHECK(r3.ground_truth);
    REQUIRE(r3.witness.has_value());
    CHECK((r3.witness->pow(3)).agrees_with(PadicNumber::from_integer(3, 2)));
  }

  TEST_CASE("definability on a small grid") {
    for (Prime p : {2, 3, 5, 7}) {
      for (std::int64_t k = 0; k <= 2; ++k) {
        for (std::int64_t m = -30; m <= 30; ++m) {
          if (m == 0) continue;
          const auto a = PadicNumber::from_rational(m, oracle::power(p, k), p);
          const auto r = zp_membership_via_definability(a);
          CHECK(r.claimed == r.ground_truth);
        }
      }
    }
  }
}
