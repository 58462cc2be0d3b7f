#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "valkit/valkit.hpp"

using namespace valkit;

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::vector<BigInt> point(std::initializer_list<std::int64_t> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("value and derivative") {
    const auto p = parse_univariate("x^2 - 2", Ring::modulo(oracle::power(7, 5)));
    CHECK(p.evaluate_with_derivative(3) == std::pair<BigInt, BigInt>(7, 6));
    CHECK(UniPoly::constant(5).evaluate_with_derivative(9) == std::pair<BigInt, BigInt>(5, 0));
    CHECK(parse_univariate("x^3").evaluate_with_derivative(2) == std::pair<BigInt, BigInt>(8, 12));
  }

  TEST_CASE("evaluating outside the coefficient ring") {
    const auto p = parse_univariate("x^2 - 2", Ring::modulo(49));
    try {
      (void)p.evaluate_with_derivative(50);
      FAIL("expected RingMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RingMismatch);
    }
  }

  TEST_CASE("canonical degree") {
    CHECK_FALSE(UniPoly({0, 0}).degree().has_value());
    CHECK(UniPoly({1, 2, 0, 0}).degree() == 1u);
    CHECK((parse_univariate("x^2 + 1") - parse_univariate("x^2")).degree() == 0u);
  }

  TEST_CASE("Taylor coefficients of x^3") {
    const auto parts = taylor_coefficients(parse_univariate("x^3"));
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == parse_univariate("x^3"));
    CHECK(parts[1] == parse_univariate("3*x^2"));
    CHECK(parts[2] == parse_univariate("3*x"));
    CHECK(parts[3] == UniPoly::constant(1));
    BigInt total = 0;
    for (const auto& q : parts) total += q.evaluate(2);
    CHECK(total == 27);
  }

  TEST_CASE("Taylor coefficients of a constant") {
    const auto parts = taylor_coefficients(UniPoly::constant(4));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == UniPoly::constant(4));
  }

  TEST_CASE("Taylor coefficients of monomials are binomial") {
    for (std::size_t n = 0; n <= 9; ++n) {
      const auto parts = taylor_coefficients(UniPoly::monomial(1, n));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(parts[i] == UniPoly::monomial(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)), n - i));
      }
    }
  }

  TEST_CASE("Taylor identity on random polynomials") {
    testgen::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<BigInt> cs;
      const auto deg = rng.range(0, 7);
      for (std::int64_t i = 0; i <= deg; ++i) cs.push_back(rng.integer(50));
      const bool modular = rng.coin();
      const Ring ring = modular ? Ring::modulo(rng.pick(std::vector<BigInt>{2, 3, 5, 7, 11})) : Ring::integers();
      const UniPoly p(cs, ring);
      const BigInt a = modular ? ring.reduce(rng.integer(100)) : rng.integer(100);
      const BigInt b = modular ? ring.reduce(rng.integer(100)) : rng.integer(100);
      const auto parts = taylor_coefficients(p);
      BigInt sum = 0, bp = 1;
      for (const auto& q : parts) {
        sum += q.evaluate(a) * bp;
        bp *= b;
      }
      CHECK(ring.reduce(sum) == p.evaluate(ring.reduce(a + b)));
      if (!parts.empty()) CHECK(parts[0] == p);
      if (parts.size() > 1) CHECK(parts[1] == p.derivative());
    }
  }

  TEST_CASE("Terjanian G at the unit vectors and homogeneity") {
    const Form g = terjanian_G();
    CHECK(form_evaluate(g, point({1, 0, 0})) == 1);
    CHECK(form_evaluate(g, point({0, 0, 0})) == 0);
    CHECK(form_evaluate(g, point({2, 2, 2})) == 16 * form_evaluate(g, point({1, 1, 1})));
    CHECK(form_evaluate(g, point({1, 1, 1})) == -3);
  }

  TEST_CASE("evaluation modulo and arity") {
    const Form f = parse_form("x1^2 + x2^2");
    CHECK(form_evaluate(f, point({3, 4}), BigInt(7)) == 4);
    try {
      (void)form_evaluate(f, point({1}));
      FAIL("expected ArityMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ArityMismatch);
    }
  }

  TEST_CASE("homogeneity scaling on random forms") {
    testgen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
      const auto d = static_cast<std::uint32_t>(rng.range(1, 4));
      MultiPoly poly(n);
      for (int k = 0; k < 5; ++k) {
        Exponents e(n, 0);
        for (std::uint32_t i = 0; i < d; ++i) ++e[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1))];
        poly = poly + MultiPoly(n, {{e, rng.nonzero_integer(9)}});
      }
      if (poly.is_zero()) continue;
      const Form f(poly);
      std::vector<BigInt> x, cx;
      const BigInt c = rng.integer(6);
      for (std::size_t i = 0; i < n; ++i) {
        x.push_back(rng.integer(10));
        cx.push_back(c * x.back());
      }
      BigInt cd = 1;
      for (std::uint32_t i = 0; i < d; ++i) cd *= c;
      CHECK(form_evaluate(f, cx) == cd * form_evaluate(f, x));
    }
  }

  TEST_CASE("non-homogeneous input is not a form") {
    try {
      (void)parse_form("x1^2 + x2");
      FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotHomogeneous);
    }
  }

  TEST_CASE("restricting the last variable") {
    CHECK(restrict_last_variable(parse_form("x1^2 + x1*x2")).poly() == parse_polynomial("x1^2").poly);
    try {
      (void)restrict_last_variable(parse_form("x1*x2"));
      FAIL("expected BecameZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BecameZero);
    }
    const Form g = restrict_last_variable(terjanian_G());
    CHECK(g.poly() == parse_polynomial("x^4 + y^4 - x^2*y^2", std::vector<std::string>{"x", "y"}).poly);
  }

  TEST_CASE("parser variable ordering and errors") {
    const auto parsed = parse_polynomial("x10*x2 + x1");
    CHECK(parsed.variables.size() == 10);
    const auto named = parse_polynomial("y*z + x");
    CHECK(named.variables == std::vector<std::string>{"x", "y", "z"});
    try {
      (void)parse_polynomial("2x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 1);
    }
  }

  TEST_CASE("multivariate arithmetic stays canonical") {
    const auto a = parse_polynomial("x1 + x2").poly, b = parse_polynomial("x1 - x2").poly;
    CHECK(a * b == parse_polynomial("x1^2 - x2^2").poly);
    CHECK((a - a).is_zero());
    CHECK((a - a).terms().empty());
    CHECK(a.pow(2).partial_derivative(0) == BigInt(2) * a);
  }
}
