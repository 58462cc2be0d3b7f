#include <doctest.h>

#include <functional>

#include "support/generators.hpp"
#include "support/sentence_oracle.hpp"
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

std::vector<FiniteLocalRing> small_rings() {
  std::vector<FiniteLocalRing> out;
  for (Prime p : {2, 3, 5, 7})
    for (int n = 1; n <= 4; ++n)
      for (RingKind k : {RingKind::IntegersMod, RingKind::TruncatedPolynomials}) out.push_back(FiniteLocalRing::make(k, p, n));
  return out;
}

}  // namespace

TEST_SUITE("local_rings") {
  TEST_CASE("arithmetic examples") {
    const auto z27 = FiniteLocalRing::integers_mod(3, 3);
    const RingElement a(z27, 13), b(z27, 20);
    CHECK((a + b).code() == 6);
    const auto f2 = FiniteLocalRing::truncated(2, 2);
    const RingElement u(f2, f2.from_digits({1, 1}));
    CHECK((u * u).code() == f2.one());
    CHECK((a + RingElement(z27, 0)) == a);
    CHECK(kind_of([&] { (void)(a + u); }) == ErrorKind::RingMismatch);
  }

  TEST_CASE("digit decomposition") {
    const auto z27 = FiniteLocalRing::integers_mod(3, 3);
    CHECK(digit_decompose(RingElement(z27, 13)) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(digit_decompose(RingElement(z27, 0)) == std::vector<std::int64_t>{0, 0, 0});
    const auto f = FiniteLocalRing::truncated(5, 3);
    const auto x = f.from_digits({4, 0, 2});
    CHECK(f.digits(x) == std::vector<std::int64_t>{4, 0, 2});
  }

  TEST_CASE("characteristic and residue lifts") {
    const auto a = residue_char_probe(FiniteLocalRing::integers_mod(5, 2));
    CHECK(a.characteristic == 25);
    CHECK(a.residue_field_order == 5);
    CHECK_FALSE(a.lift_exists);
    const auto b = residue_char_probe(FiniteLocalRing::truncated(5, 2));
    CHECK(b.characteristic == 5);
    CHECK(b.residue_field_order == 5);
    CHECK(b.lift_exists);
    for (RingKind k : {RingKind::IntegersMod, RingKind::TruncatedPolynomials}) {
      const auto c = residue_char_probe(FiniteLocalRing::make(k, 7, 1));
      CHECK(c.characteristic == 7);
      CHECK(c.lift_exists);
    }
  }

  TEST_CASE("names and size limits") {
    CHECK(FiniteLocalRing::integers_mod(5, 2).name() == "Z/25");
    CHECK(FiniteLocalRing::truncated(5, 2).name() == "F_5[t]/(t^2)");
    CHECK(kind_of([] { (void)FiniteLocalRing::integers_mod(4, 2); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { (void)FiniteLocalRing::integers_mod(101, 5); }) == ErrorKind::DomainTooLarge);
  }

  TEST_CASE("digit round trip over every small ring") {
    for (const auto& r : small_rings()) {
      for (FiniteLocalRing::Code a = 0; a < r.size(); ++a) {
        const auto ds = digit_decompose(RingElement(r, a));
        REQUIRE(ds.size() == static_cast<std::size_t>(r.nilpotency()));
        FiniteLocalRing::Code rebuilt = 0, tp = r.one();
        for (auto d : ds) {
          CHECK(d >= 0);
          CHECK(d < r.prime());
          rebuilt = r.add(rebuilt, r.mul(r.from_integer(d), tp));
          tp = r.mul(tp, r.uniformizer());
        }
        CHECK(rebuilt == a);
        CHECK(r.from_digits(ds) == a);
      }
    }
  }

  TEST_CASE("t-power chain and localness") {
    for (const auto& r : small_rings()) {
      const auto t = r.uniformizer();
      CHECK(r.pow(t, static_cast<std::uint64_t>(r.nilpotency())) == r.zero());
      if (r.nilpotency() > 1) CHECK(r.pow(t, static_cast<std::uint64_t>(r.nilpotency() - 1)) != r.zero());
      for (int m = 0; m < r.nilpotency(); ++m) {
        const auto tm = r.pow(t, static_cast<std::uint64_t>(m));
        const auto tm1 = r.pow(t, static_cast<std::uint64_t>(m + 1));
        bool in_ideal = false;
        for (FiniteLocalRing::Code c = 0; c < r.size() && !in_ideal; ++c) in_ideal = r.mul(c, tm1) == tm;
        CHECK_FALSE(in_ideal);
      }
      for (FiniteLocalRing::Code a = 0; a < r.size(); ++a) {
        bool invertible = false;
        for (FiniteLocalRing::Code b = 0; b < r.size() && !invertible; ++b) invertible = r.mul(a, b) == r.one();
        bool in_max = false;
        for (FiniteLocalRing::Code c = 0; c < r.size() && !in_max; ++c) in_max = r.mul(c, t) == a;
        CHECK(invertible == r.is_unit(a));
        CHECK(invertible != in_max);
      }
    }
  }

  TEST_CASE("ring arithmetic matches the reference model") {
    for (const auto& r : small_rings()) {
      if (r.size() > 400) continue;
      const oracle::RingModel m(r.kind() == RingKind::TruncatedPolynomials, r.prime(), r.nilpotency());
      for (FiniteLocalRing::Code a = 0; a < r.size(); ++a) {
        CHECK(r.neg(a) == static_cast<FiniteLocalRing::Code>(m.neg(a)));
        for (FiniteLocalRing::Code b = 0; b < r.size(); b += 3) {
          CHECK(r.add(a, b) == static_cast<FiniteLocalRing::Code>(m.add(a, b)));
          CHECK(r.mul(a, b) == static_cast<FiniteLocalRing::Code>(m.mul(a, b)));
        }
      }
    }
  }
}
