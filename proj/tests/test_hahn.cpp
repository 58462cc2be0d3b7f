#include <doctest.h>

#include <functional>

#include "support/generators.hpp"
#include "valkit/valkit.hpp"

using namespace valkit;

namespace {

const CoefficientField Q = CoefficientField::rationals();

HahnSeries q_series(std::string_view text) { return HahnSeries::parse(text, ExponentGroup::Rationals, Q); }

HahnSeries random_series(testgen::Rng& rng, ExponentGroup group, const CoefficientField& field) {
  std::vector<HahnSeries::Term> terms;
  const auto count = rng.range(1, 4);
  for (std::int64_t i = 0; i < count; ++i) {
    Exponent e;
    switch (group) {
      case ExponentGroup::Integers: e = Exponent(rng.range(-2, 4)); break;
      case ExponentGroup::Rationals: e = Exponent(Rational(rng.range(-6, 12), rng.range(1, 3))); break;
      case ExponentGroup::IntegerPairs: e = Exponent(Rational(rng.range(-1, 2)), Rational(rng.range(-3, 3))); break;
    }
    Rational c = rng.nonzero_integer(5);
    if (!field.is_rationals() && field.normalize(c) == 0) c = 1;
    terms.emplace_back(e, c);
  }
  auto f = HahnSeries::from_terms(group, field, terms);
  if (f.is_zero()) f = HahnSeries::monomial(group, field, 1, Exponent(0));
  return f;
}

// Every known coefficient of the product is that of 1.
bool below_cap_is_one(const HahnSeries& product) {
  for (const auto& [e, c] : product.terms()) {
    if (e == Exponent(0) ? c != 1 : c != 0) return false;
  }
  return !product.cap() || *product.cap() <= Exponent(0) || product.coefficient(Exponent(0)) == 1;
}

}  // namespace

TEST_SUITE("hahn") {
  TEST_CASE("half powers multiply to t") {
    const auto h = HahnSeries::monomial(ExponentGroup::Rationals, Q, 1, Exponent(Rational(1, 2)));
    CHECK(h * h == HahnSeries::monomial(ExponentGroup::Rationals, Q, 1, Exponent(1)));
  }

  TEST_CASE("(1 + t)(1 - t)") {
    const auto a = HahnSeries::parse("1 + t", ExponentGroup::Integers, Q);
    const auto b = HahnSeries::parse("1 - t", ExponentGroup::Integers, Q);
    CHECK(a * b == HahnSeries::parse("1 - t^2", ExponentGroup::Integers, Q));
  }

  TEST_CASE("f - f vanishes") {
    const auto f = q_series("3*t^(-1/2) + 1");
    CHECK((f + (-f)).is_zero());
  }

  TEST_CASE("mismatched groups") {
    try {
      (void)(q_series("t") + HahnSeries::parse("t", ExponentGroup::Integers, Q));
      FAIL("expected GroupMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GroupMismatch);
    }
  }

  TEST_CASE("inverse of 1 - t") {
    const auto g = HahnSeries::parse("1 - t", ExponentGroup::Integers, Q);
    const auto inv = g.inverse(Exponent(6));
    CHECK(inv == HahnSeries::parse("1 + t + t^2 + t^3 + t^4 + t^5 + O(t^6)", ExponentGroup::Integers, Q));
  }

  TEST_CASE("inverse of t^(-1/2) + 1") {
    const auto g = q_series("t^(-1/2) + 1");
    const auto inv = g.inverse(Exponent(Rational(5, 2)));
    CHECK(inv == q_series("t^(1/2) - t + t^(3/2) - t^2 + t^(5/2) + O(t^3)"));
    CHECK((g * inv).cap() == Exponent(Rational(5, 2)));
    CHECK(below_cap_is_one(g * inv));
  }

  TEST_CASE("inverse of a constant and of zero") {
    const auto inv = q_series("4").inverse(Exponent(5));
    CHECK(inv.coefficient(Exponent(0)) == Rational(1, 4));
    CHECK(inv.terms().size() == 1);
    try {
      (void)HahnSeries::zero(ExponentGroup::Rationals, Q).inverse(Exponent(5));
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("valuation, residue and angular component") {
    const auto f = q_series("3*t^(-1/2) + 1");
    CHECK(f.valuation() == Exponent(Rational(-1, 2)));
    CHECK(f.angular_component() == 3);
    CHECK(f.residue() == 0);
    const auto z = HahnSeries::zero(ExponentGroup::Rationals, Q);
    CHECK_FALSE(z.valuation().has_value());
    CHECK(z.angular_component() == 0);
    const auto g = q_series("5 + t");
    CHECK(g.valuation() == Exponent(0));
    CHECK(g.residue() == 5);
    CHECK(g.angular_component() == 5);
  }

  TEST_CASE("text round trip") {
    const auto f = q_series("3*t^(-1/2) + 1 + O(t^5)");
    CHECK(f.cap() == Exponent(5));
    CHECK(q_series(f.to_string()) == f);
    const auto g = HahnSeries::parse("t^(1,-2) + 2*t^(0,3) + O(t^(2,0))", ExponentGroup::IntegerPairs, Q);
    CHECK(HahnSeries::parse(g.to_string(), ExponentGroup::IntegerPairs, Q) == g);
    CHECK(HahnSeries::parse("2 + t^(0,1)", ExponentGroup::IntegerPairs, Q) ==
          HahnSeries::parse("2*t^(0,0) + t^(0,1)", ExponentGroup::IntegerPairs, Q));
    CHECK(g.valuation() == Exponent(0, 3));
  }

  TEST_CASE("convolution pairs match a cross-product filter") {
    testgen::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Exponent> a, b;
      for (int i = 0; i < rng.range(1, 6); ++i) a.emplace_back(Rational(rng.range(-4, 8), rng.range(1, 2)));
      for (int i = 0; i < rng.range(1, 6); ++i) b.emplace_back(Rational(rng.range(-4, 8), rng.range(1, 2)));
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      const Exponent gamma(Rational(rng.range(-8, 16), 2));
      std::size_t expected = 0;
      for (const auto& x : a)
        for (const auto& y : b)
          if (x + y == gamma) ++expected;
      const auto pairs = convolution_pairs(a, b, gamma);
      CHECK(pairs.size() == expected);
      for (const auto& [x, y] : pairs) CHECK(x + y == gamma);
    }
  }

  TEST_CASE("valuation laws and inversion across groups") {
    testgen::Rng rng(67);
    const std::vector<ExponentGroup> groups{ExponentGroup::Integers, ExponentGroup::Rationals,
                                            ExponentGroup::IntegerPairs};
    for (int trial = 0; trial < 300; ++trial) {
      const auto group = rng.pick(groups);
      const auto field = rng.coin() ? Q : CoefficientField::prime_field(rng.pick(std::vector<Prime>{3, 5, 7}));
      const auto f = random_series(rng, group, field), g = random_series(rng, group, field);
      CHECK((f * g).valuation() == *f.valuation() + *g.valuation());
      const auto s = f + g;
      if (!s.is_zero()) CHECK(*s.valuation() >= std::min(*f.valuation(), *g.valuation()));
      const Exponent cap = group == ExponentGroup::IntegerPairs ? Exponent(2, 0) : Exponent(4);
      const auto inv = g.inverse(cap);
      const auto product = g * inv;
      CHECK(below_cap_is_one(product));
      if (group != ExponentGroup::IntegerPairs) CHECK(product.cap() == cap);
    }
  }

  TEST_CASE("integer exponents agree with Laurent series") {
    testgen::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
      const auto field = rng.coin() ? Q : CoefficientField::prime_field(5);
      const auto f = random_series(rng, ExponentGroup::Integers, field);
      const auto g = random_series(rng, ExponentGroup::Integers, field);
      auto to_laurent = [&](const HahnSeries& h) {
        std::vector<std::pair<std::int64_t, Rational>> terms;
        for (const auto& [e, c] : h.terms()) terms.emplace_back(static_cast<std::int64_t>(numerator(e.major)), c);
        return LaurentSeries::from_terms(field, terms);
      };
      const auto product = f * g;
      const auto lp = to_laurent(f) * to_laurent(g);
      CHECK(to_laurent(product) == lp);
      const auto sum = f + g;
      const auto ls = to_laurent(f) + to_laurent(g);
      CHECK(to_laurent(sum) == ls);
    }
  }
}
