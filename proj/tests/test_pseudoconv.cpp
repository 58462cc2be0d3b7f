#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "valkit/valkit.hpp"

using namespace valkit;

namespace {

SequencePrefix<PadicNumber> partial_sums(std::size_t terms) {
  SequencePrefix<PadicNumber> s;
  BigInt sum = 0;
  for (std::size_t i = 0; i < terms; ++i) {
    sum += oracle::power(5, static_cast<std::int64_t>(i));
    s.values.push_back(PadicNumber::from_integer(sum, 5));
  }
  return s;
}

PadicNumber q5(const Rational& r) { return PadicNumber::from_rational(r, 5); }

BigInt evaluate_at(const UniPoly& p, const BigInt& x) { return p.evaluate(x); }

}  // namespace

TEST_SUITE("pseudoconv") {
  TEST_CASE("partial sums of the geometric series") {
    const auto s = partial_sums(6);
    CHECK(is_pc_prefix(s).holds);
    CHECK(is_pseudolimit_prefix(s, q5(Rational(-1, 4))));
    CHECK_FALSE(is_pseudolimit_prefix(s, PadicNumber::zero(5)));
    const auto b = q5(Rational(-1, 4)) + PadicNumber::from_integer(oracle::power(5, 8), 5);
    CHECK(is_pseudolimit_prefix(s, b));
    CHECK(valuation_pattern(s) == ValuationPattern::EventuallyConstant);
  }

  TEST_CASE("alternating and constant sequences") {
    SequencePrefix<PadicNumber> alt, constant;
    for (int i = 0; i < 6; ++i) {
      alt.values.push_back(PadicNumber::from_integer(i % 2 ? -1 : 1, 5));
      constant.values.push_back(PadicNumber::from_integer(7, 5));
    }
    const auto v = is_pc_prefix(alt);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violation.has_value());
    const auto [j1, j2, j3] = *v.violation;
    CHECK(j1 < j2);
    CHECK(j2 < j3);
    CHECK_FALSE(is_pc_prefix(constant).holds);
  }

  TEST_CASE("valuation patterns") {
    SequencePrefix<PadicNumber> powers;
    for (int i = 0; i < 6; ++i) powers.values.push_back(PadicNumber::from_integer(oracle::power(5, i), 5));
    CHECK(valuation_pattern(powers) == ValuationPattern::EventuallyStrictlyIncreasing);
    SequencePrefix<PadicNumber> shortp;
    shortp.values = {PadicNumber::from_integer(1, 5), PadicNumber::from_integer(5, 5)};
    CHECK(valuation_pattern(shortp) == ValuationPattern::Inconclusive);
    CHECK(to_string(ValuationPattern::Inconclusive) == "inconclusive");
  }

  TEST_CASE("prefix length is validated") {
    SequencePrefix<PadicNumber> s = partial_sums(4);
    s.tail_index = 2;
    try {
      (void)is_pc_prefix(s);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }

  TEST_CASE("polynomials are continuous on the window") {
    const auto s = partial_sums(7);
    const auto a = q5(Rational(-1, 4));
    CHECK(polynomial_continuity_check(s, a, parse_univariate("x^2")).holds);
    CHECK(polynomial_continuity_check(s, a, parse_univariate("x")).holds);
    SequencePrefix<PadicNumber> t;
    for (int i = 1; i <= 6; ++i) t.values.push_back(PadicNumber::from_integer(2 + oracle::power(5, i), 5));
    const auto two = PadicNumber::from_integer(2, 5);
    const auto r = polynomial_continuity_check(t, two, parse_univariate("x - 2"));
    CHECK(r.holds);
    for (std::size_t i = 0; i < r.valuations.size(); ++i) {
      CHECK(r.valuations[i] == Valuation(static_cast<std::int64_t>(i) + 1));
    }
  }

  TEST_CASE("Laurent sequences") {
    const auto f = CoefficientField::prime_field(3);
    SequencePrefix<LaurentSeries> s;
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::int64_t i = 0; i < 6; ++i) {
      terms.emplace_back(i, 1);
      s.values.push_back(LaurentSeries::from_terms(f, terms));
    }
    CHECK(is_pc_prefix(s).holds);
    const auto limit = LaurentSeries::from_terms(f, {{0, 1}, {1, -1}}).inverse(20);
    CHECK(is_pseudolimit_prefix(s, limit));
    CHECK(polynomial_continuity_check(s, limit, parse_univariate("x^3 + x")).holds);
  }

  TEST_CASE("pseudolimit implies pseudo-Cauchy and the alpha law") {
    testgen::Rng rng(73);
    int accepted = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const Prime p = rng.pick(std::vector<Prime>{2, 3, 5, 7});
      const Rational limit_r = rng.rational(100);
      const auto limit = PadicNumber::from_rational(limit_r, p);
      SequencePrefix<PadicNumber> s;
      s.tail_index = static_cast<std::size_t>(rng.range(0, 2));
      std::int64_t e = rng.range(-2, 1);
      const auto len = rng.range(static_cast<std::int64_t>(s.tail_index) + 3, 8);
      for (std::int64_t i = 0; i < len; ++i) {
        e += rng.coin(0.8) ? rng.range(1, 3) : rng.range(-1, 0);
        BigInt unit = rng.nonzero_integer(20);
        while (unit % p == 0) unit += 1;
        const Rational scale = e >= 0 ? Rational(oracle::power(p, e)) : Rational(BigInt(1), oracle::power(p, -e));
        s.values.push_back(PadicNumber::from_rational(limit_r + Rational(unit) * scale, p));
      }
      if (!is_pseudolimit_prefix(s, limit)) continue;
      ++accepted;
      CHECK(is_pc_prefix(s).holds);
      for (std::size_t i = s.tail_index; i + 1 < s.values.size(); ++i) {
        const auto alpha = difference_valuation(s.values[i + 1], s.values[i]);
        for (std::size_t j = i + 1; j < s.values.size(); ++j) {
          CHECK(difference_valuation(s.values[j], s.values[i]) == alpha);
        }
      }
    }
    CHECK(accepted > 50);
  }

  TEST_CASE("values of a polynomial stabilise away from its roots") {
    const auto s = partial_sums(8);
    for (const char* text : {"x^2 + 1", "x^3 - 2", "2*x + 7"}) {
      const auto p = parse_univariate(text);
      std::vector<Valuation> vs;
      for (const auto& a : s.values) vs.push_back(PadicNumber::from_integer(evaluate_at(p, a.representative()), 5).valuation());
      CHECK(vs[vs.size() - 1] == vs[vs.size() - 2]);
      CHECK(vs[vs.size() - 2] == vs[vs.size() - 3]);
    }
  }
}
