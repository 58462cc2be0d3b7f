#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "valkit/valkit.hpp"

using namespace valkit;

namespace {

using Digits = std::vector<std::int64_t>;

std::int64_t rational_order(const Rational& r, Prime p) {
  return oracle::order(numerator(r), p) - oracle::order(denominator(r), p);
}

// Checks x against an exact rational by comparing the unit part modulo p^precision.
bool matches_rational(const PadicNumber& x, const Rational& r) {
  if (r == 0) return x.is_zero();
  const Prime p = x.prime();
  const auto v = rational_order(r, p);
  if (x.valuation() != Valuation(v)) return false;
  Rational unit = r;
  if (v > 0) unit /= Rational(oracle::power(p, v));
  if (v < 0) unit *= Rational(oracle::power(p, -v));
  return oracle::reduce(unit, p, x.precision()) == oracle::from_digits(x.unit_digits(), p);
}

}  // namespace

TEST_SUITE("valuation_core") {
  TEST_CASE("minus one is the all-(p-1) digit string") {
    const auto x = PadicNumber::from_rational(-1, 1, 5, 4);
    CHECK(x.valuation() == Valuation(0));
    CHECK(x.unit_digits() == Digits{4, 4, 4, 4});
  }

  TEST_CASE("zero has infinite valuation and no digits") {
    const auto x = PadicNumber::from_rational(0, 1, 7, 4);
    CHECK(x.is_zero());
    CHECK(x.valuation().is_infinite());
    CHECK(x.unit_digits().empty());
  }

  TEST_CASE("75 in Q_5 factors as 3 * 5^2") {
    const auto x = PadicNumber::from_rational(75, 1, 5, 3);
    CHECK(x.valuation() == Valuation(2));
    CHECK(x.unit_digits() == Digits{3, 0, 0});
    CHECK(x.residue() == 0);
    CHECK(x.angular_component() == 3);
  }

  TEST_CASE("non-prime modulus is rejected") {
    try {
      (void)PadicNumber::from_rational(1, 1, 6, 4);
      FAIL("expected NotPrime");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPrime);
    }
  }

  TEST_CASE("representation times denominator recovers numerator") {
    const auto x = PadicNumber::from_rational(3, 50, 5, 10);
    CHECK(x.valuation() == Valuation(-2));
    const BigInt m = oracle::power(5, 10);
    // x = 5^-2 * u, so 50 * x = 2 * u and 2u = 3 mod 5^10.
    CHECK(oracle::mod(2 * x.unit(), m) == 3);
  }

  TEST_CASE("17 * 12 in Z_7") {
    const auto a = PadicNumber::from_integer(17, 7, 3);
    const auto b = PadicNumber::from_integer(12, 7, 3);
    const auto c = a * b;
    CHECK(c.unit_digits() == oracle::digits(204, 7, 3));
    CHECK(c.unit_digits() == Digits{1, 1, 4});
  }

  TEST_CASE("additive identities") {
    const auto x = PadicNumber::from_rational(7, 3, 5, 12);
    CHECK(x + PadicNumber::zero(5) == x);
    CHECK(-(-x) == x);
  }

  TEST_CASE("inverse of -4 in Z_5 is the sum of powers of 5") {
    const auto x = PadicNumber::from_integer(-4, 5, 8);
    const auto y = x.inverse();
    CHECK(y.unit_digits() == Digits(8, 1));
    CHECK(oracle::mod(y.unit() * -4, oracle::power(5, 8)) == 1);
  }

  TEST_CASE("invert zero and mixed primes") {
    try {
      (void)PadicNumber::zero(5).inverse();
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    try {
      (void)(PadicNumber::from_integer(1, 5) + PadicNumber::from_integer(1, 7));
      FAIL("expected PrimeMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrimeMismatch);
    }
  }

  TEST_CASE("full cancellation refuses to report a valuation") {
    const auto a = PadicNumber::from_integer(1, 5, 4);
    const auto b = PadicNumber::from_integer(-1, 5, 4);
    try {
      (void)(a + b);
      FAIL("expected PrecisionLoss");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrecisionLoss);
    }
  }

  TEST_CASE("partial cancellation drops trusted digits") {
    const auto a = PadicNumber::from_integer(1, 5, 6);
    const auto b = PadicNumber::from_integer(24, 5, 6);
    const auto c = a + b;  // 25
    CHECK(c.valuation() == Valuation(2));
    CHECK(c.precision() == 4);
    CHECK(c.unit_digits().front() == 1);
  }

  TEST_CASE("residue and angular component") {
    CHECK(PadicNumber::from_integer(10, 7).residue() == 3);
    CHECK(PadicNumber::from_integer(75, 5).residue() == 0);
    CHECK(PadicNumber::from_rational(Rational(1, 5), 5).residue() == 0);
    CHECK(PadicNumber::zero(5).angular_component() == 0);
    const auto x = PadicNumber::from_integer(75, 5);
    const auto y = PadicNumber::from_rational(Rational(1, 5), 5);
    CHECK((x * y).angular_component() == 3);
    CHECK(PadicNumber::from_integer(15, 5).angular_component() == 3);
  }

  TEST_CASE("text round trip") {
    const auto x = PadicNumber::from_rational(3, 50, 5, 6);
    CHECK(PadicNumber::parse(x.to_string()) == x);
    CHECK(PadicNumber::parse("0", Prime{3}).is_zero());
  }

  TEST_CASE("expression evaluation") {
    CHECK(evaluate_padic_expression("(-1)", 5, 4).unit_digits() == Digits{4, 4, 4, 4});
    CHECK(evaluate_rational_expression("3/50 + 2^-3") == Rational(3, 50) + Rational(1, 8));
  }

  TEST_CASE("Laurent valuation, residue and angular component") {
    const auto f5 = CoefficientField::prime_field(5);
    const auto x = LaurentSeries::from_terms(f5, {{-3, 1}, {0, 1}});
    CHECK(x.valuation() == Valuation(-3));
    CHECK(x.residue() == 0);
    CHECK(x.angular_component() == 1);
    CHECK(LaurentSeries::zero(f5).valuation().is_infinite());
    const auto y = LaurentSeries::from_terms(f5, {{0, 3}, {2, 1}});
    CHECK(y.residue() == 3);
  }

  TEST_CASE("inverse of 1 - t is the geometric series") {
    const auto q = CoefficientField::rationals();
    const auto f = LaurentSeries::from_terms(q, {{0, 1}, {1, -1}});
    const auto g = f.inverse(10);
    CHECK(g.valuation() == Valuation(0));
    CHECK(g.coefficients() == std::vector<Rational>(10, Rational(1)));
    CHECK((f * g).agrees_with(LaurentSeries::constant(q, 1)));
  }

  TEST_CASE("t^-1 * t = 1") {
    const auto q = CoefficientField::rationals();
    CHECK(LaurentSeries::monomial(q, 1, -1) * LaurentSeries::monomial(q, 1, 1) == LaurentSeries::constant(q, 1));
  }

  TEST_CASE("2 + 3 vanishes coefficientwise over F_5") {
    const auto f5 = CoefficientField::prime_field(5);
    std::vector<std::pair<std::int64_t, Rational>> twos, threes;
    for (std::int64_t i = 0; i < 6; ++i) {
      twos.emplace_back(i, 2);
      threes.emplace_back(i, 3);
    }
    CHECK((LaurentSeries::from_terms(f5, twos) + LaurentSeries::from_terms(f5, threes)).is_zero());
    // With an unknown tail beyond t^6 the same sum cannot claim to be zero.
    try {
      (void)(LaurentSeries::from_terms(f5, twos, 6) + LaurentSeries::from_terms(f5, threes, 6));
      FAIL("expected PrecisionLoss");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrecisionLoss);
    }
  }

  TEST_CASE("series expression evaluation") {
    const auto f = evaluate_series_expression("1/(1 - t)", CoefficientField::rationals(), 5);
    CHECK(f.coefficients() == std::vector<Rational>(5, Rational(1)));
    CHECK(LaurentSeries::parse(f.to_string(), CoefficientField::rationals()) == f);
  }

  TEST_CASE("valuation properties on random rationals") {
    testgen::Rng rng(11);
    const std::vector<Prime> primes{2, 3, 5, 7, 11};
    for (int trial = 0; trial < 2000; ++trial) {
      const Prime p = rng.pick(primes);
      const Rational ra = rng.nonzero_rational(500), rb = rng.nonzero_rational(500);
      const auto a = PadicNumber::from_rational(ra, p, 16), b = PadicNumber::from_rational(rb, p, 16);
      CHECK(matches_rational(a, ra));
      CHECK((-a).valuation() == a.valuation());
      CHECK(matches_rational(a * b, ra * rb));
      CHECK((a * b).angular_component() == (a.angular_component() * b.angular_component()) % p);
      if (ra + rb != 0) {
        const auto s = a + b;
        CHECK(s.valuation() >= min(a.valuation(), b.valuation()));
        if (a.valuation() != b.valuation()) CHECK(s.valuation() == min(a.valuation(), b.valuation()));
        CHECK(matches_rational(s, ra + rb));
      }
      if (a.valuation() == Valuation(0)) CHECK(a.residue() == a.angular_component());
    }
    CHECK(PadicNumber::from_integer(1, 3).valuation() == Valuation(0));
    CHECK(PadicNumber::from_integer(-1, 3).valuation() == Valuation(0));
  }
}
