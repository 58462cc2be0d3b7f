#include "valkit/hensel.hpp"

#include <algorithm>
#include <numeric>

#include "valkit/error.hpp"

namespace valkit {

namespace {

constexpr int kMaxNewtonIterations = 256;

void require_integer_ring(const UniPoly& poly) {
  if (!poly.ring().is_integers()) fail(ErrorKind::RingMismatch, "Hensel lifting needs a polynomial over Z");
}

/// Least c in [1, p) with c^n ≡ r mod p, if any.
std::optional<std::int64_t> residue_nth_root(std::int64_t r, std::uint32_t n, Prime p) {
  for (std::int64_t c = 1; c < p; ++c) {
    if (boost::multiprecision::powm(BigInt(c), n, BigInt(p)) == r) return c;
  }
  return std::nullopt;
}

PadicNumber lifted_root(const BigInt& x, Prime p, std::int64_t known, const UniPoly& poly) {
  if (x == 0 && poly.evaluate(x) == 0) return PadicNumber::zero(p);
  return PadicNumber::from_residue_class(x, p, known);
}

}  // namespace

NewtonStep newton_lift(const UniPoly& poly, const BigInt& x0, Prime p, std::int64_t target) {
  require_integer_ring(poly);
  require_prime(p);
  if (target < 1) fail(ErrorKind::InvalidArgument, "target precision must be positive");
  const UniPoly slope_poly = poly.derivative();
  const BigInt slope0 = slope_poly.evaluate(x0);
  if (slope0 == 0) fail(ErrorKind::HypothesisFailed, "derivative vanishes at the starting point");
  const std::int64_t e = p_adic_order(slope0, p);
  const BigInt value0 = poly.evaluate(x0);
  if (value0 != 0 && p_adic_order(value0, p) <= 2 * e) {
    fail(ErrorKind::HypothesisFailed, "v(P(x)) = " + std::to_string(p_adic_order(value0, p)) +
                                          " does not exceed 2 v(P'(x)) = " + std::to_string(2 * e));
  }

  const BigInt modulus = prime_power(p, target);
  const BigInt pe = prime_power(p, e);
  NewtonStep out{floor_mod(x0, modulus), e, 0};
  while (true) {
    const auto [value, slope] = poly.evaluate_with_derivative(out.root);
    if (value % modulus == 0) return out;
    if (++out.iterations > kMaxNewtonIterations) fail(ErrorKind::PrecisionLoss, "Newton iteration did not settle");
    if (slope == 0 || p_adic_order(slope, p) != e) {
      fail(ErrorKind::HypothesisFailed, "derivative valuation changed during Newton iteration");
    }
    const BigInt unit_inverse = inverse_mod(slope / pe, modulus);
    out.root = floor_mod(out.root - (value / pe) * unit_inverse, modulus);
  }
}

LiftResult simple_zero_lift(const UniPoly& poly, Prime p, std::int64_t seed, std::int64_t precision) {
  require_integer_ring(poly);
  require_prime(p);
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
  if (seed < 0 || seed >= p) fail(ErrorKind::InvalidArgument, "seed must lie in [0, p)");
  const auto [value, slope] = poly.evaluate_with_derivative(BigInt(seed));
  if (value % p != 0) fail(ErrorKind::NotASimpleRoot, "seed is not a root of the residue polynomial");
  if (slope % p == 0) fail(ErrorKind::NotASimpleRoot, "seed is a multiple root of the residue polynomial");
  const NewtonStep step = newton_lift(poly, BigInt(seed), p, precision);
  return {lifted_root(step.root, p, precision, poly), precision, seed, step.root};
}

LiftResult strong_zero_lift(const UniPoly& poly, Prime p, std::int64_t precision) {
  require_integer_ring(poly);
  require_prime(p);
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
  const BigInt value0 = poly.coefficient(0);
  const BigInt slope0 = poly.coefficient(1);
  if (slope0 == 0) fail(ErrorKind::HypothesisFailed, "P'(0) = 0");
  if (value0 == 0) return {PadicNumber::zero(p), precision, 0, 0};
  const std::int64_t needed = std::max(precision, p_adic_order(value0, p) + 1);
  const NewtonStep step = newton_lift(poly, BigInt(0), p, needed);
  const std::int64_t known = needed - step.derivative_valuation;
  return {PadicNumber::from_residue_class(step.root, p, known), needed, 0, step.root};
}

PadicNumber nth_root_one_plus(const PadicNumber& b, std::uint32_t n, int precision) {
  const Prime p = b.prime();
  if (n == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  if (std::gcd(static_cast<std::int64_t>(n), p) != 1) {
    fail(ErrorKind::ResidueObstruction, "p divides the root index");
  }
  if (b.is_zero()) return PadicNumber::from_integer(1, p, precision);
  if (b.valuation() < Valuation(1)) fail(ErrorKind::InvalidArgument, "nth_root_one_plus needs v(b) >= 1");
  const std::int64_t known = std::min<std::int64_t>(precision, *b.absolute_precision());
  const BigInt rhs = 1 + b.representative();
  // Q(Y) = (1 + Y)^n - (1 + b): Q(0) = -b, Q'(0) = n is a unit.
  std::vector<BigInt> cs(n + 1);
  BigInt binom = 1;
  for (std::uint32_t k = 0; k <= n; ++k) {
    cs[k] = binom;
    binom = binom * (n - k) / (k + 1);
  }
  cs[0] -= rhs;
  const NewtonStep step = newton_lift(UniPoly(std::move(cs)), BigInt(0), p, known);
  return PadicNumber::from_residue_class(1 + step.root, p, known);
}

PadicNumber nth_root_with_valuation(const PadicNumber& x, std::uint32_t n, int precision) {
  const Prime p = x.prime();
  if (n == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  if (x.is_zero()) return x;
  if (std::gcd(static_cast<std::int64_t>(n), p) != 1) fail(ErrorKind::ResidueObstruction, "p divides the root index");
  const std::int64_t v = x.valuation().value();
  if (v % static_cast<std::int64_t>(n) != 0) {
    fail(ErrorKind::ValuationNotDivisible, "valuation " + std::to_string(v) + " is not divisible by " + std::to_string(n));
  }
  const auto c = residue_nth_root(x.angular_component(), n, p);
  if (!c) fail(ErrorKind::NotAnNthPower, "leading digit has no " + std::to_string(n) + "-th root mod p");
  const int known = std::min(precision, x.precision());
  const BigInt modulus = prime_power(p, known);
  const BigInt cn = boost::multiprecision::pow(BigInt(*c), n);
  const BigInt one_plus = floor_mod(x.unit() * inverse_mod(cn, modulus), modulus);
  BigInt unit = *c;
  if (one_plus != 1) {
    const auto b = PadicNumber::from_residue_class(one_plus - 1, p, known);
    unit = floor_mod(unit * nth_root_one_plus(b, n, known).representative(), modulus);
  }
  return PadicNumber::from_unit(p, v / static_cast<std::int64_t>(n), unit, known);
}

namespace {

std::optional<Rational> exact_rational_root(const Rational& c, std::uint32_t n) {
  auto integer_root = [n](BigInt m) -> std::optional<BigInt> {
    const bool negative = m < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    if (negative) m = -m;
    // Binary search keeps this exact for arbitrary size.
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, n) < m) hi *= 2;
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      if (boost::multiprecision::pow(mid, n) < m) lo = mid + 1;
      else hi = mid;
    }
    if (boost::multiprecision::pow(lo, n) != m) return std::nullopt;
    return negative ? BigInt(-lo) : lo;
  };
  const auto num = integer_root(boost::multiprecision::numerator(c));
  const auto den = integer_root(boost::multiprecision::denominator(c));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace

LaurentSeries nth_root_with_valuation(const LaurentSeries& x, std::uint32_t n, std::int64_t precision) {
  const CoefficientField& field = x.field();
  if (n == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  if (x.is_zero()) return x;
  if (!field.is_rationals() && n % field.characteristic() == 0) {
    fail(ErrorKind::ResidueObstruction, "the characteristic divides the root index");
  }
  const std::int64_t v = x.valuation().value();
  if (v % static_cast<std::int64_t>(n) != 0) {
    fail(ErrorKind::ValuationNotDivisible, "valuation " + std::to_string(v) + " is not divisible by " + std::to_string(n));
  }
  const Rational lead = x.angular_component();
  std::optional<Rational> root;
  if (field.is_rationals()) {
    root = exact_rational_root(lead, n);
  } else if (auto c = residue_nth_root(static_cast<std::int64_t>(boost::multiprecision::numerator(lead)), n,
                                       field.characteristic())) {
    root = Rational(*c);
  }
  if (!root) fail(ErrorKind::NotAnNthPower, "leading coefficient has no " + std::to_string(n) + "-th root");

  const auto& cs = x.coefficients();
  const Rational lead_inv = field.inv(lead);
  const bool monomial = std::all_of(cs.begin() + 1, cs.end(), [](const Rational& c) { return c == 0; });
  const std::int64_t width = x.precision() ? std::min(precision, *x.precision()) : precision;
  if (monomial && x.is_exact()) return LaurentSeries::monomial(field, *root, v / static_cast<std::int64_t>(n));

  // x = lead t^v (1 + f); (1 + f)^(1/n) = Σ C(1/n, k) f^k, every coefficient
  // p-integral when p ∤ n.
  const auto w = static_cast<std::size_t>(width);
  std::vector<Rational> f(w, 0);
  for (std::size_t i = 1; i < w && i < cs.size(); ++i) f[i] = field.mul(cs[i], lead_inv);
  std::vector<Rational> sum(w, 0), power(w, 0);
  power[0] = 1;
  Rational binom = 1;
  const Rational exponent(BigInt(1), BigInt(n));
  for (std::size_t k = 0; k < w; ++k) {
    const Rational scaled = field.normalize(binom);
    for (std::size_t i = 0; i < w; ++i) sum[i] = field.add(sum[i], field.mul(scaled, power[i]));
    std::vector<Rational> next(w, 0);
    for (std::size_t i = 0; i < w; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 1; i + j < w; ++j) next[i + j] = field.add(next[i + j], field.mul(power[i], f[j]));
    }
    power = std::move(next);
    binom = binom * (exponent - static_cast<int>(k)) / static_cast<int>(k + 1);
  }
  for (auto& c : sum) c = field.mul(c, *root);
  return LaurentSeries::truncated(field, v / static_cast<std::int64_t>(n), sum);
}

bool is_nth_power(const PadicNumber& x, std::uint32_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  if (x.is_zero() || n == 1) return true;
  const Prime p = x.prime();
  if (x.valuation().value() % static_cast<std::int64_t>(n) != 0) return false;
  if (std::gcd(static_cast<std::int64_t>(n), p) == 1) return residue_nth_root(x.angular_component(), n, p).has_value();
  if (p == 2 && n == 2) {
    if (x.precision() < 3) fail(ErrorKind::PrecisionLoss, "a 2-adic square test needs three unit digits");
    return x.unit() % 8 == 1;
  }
  fail(ErrorKind::ResidueObstruction, "n-th power test with p | n is only available for squares at p = 2");
}

bool is_square(const PadicNumber& x) { return is_nth_power(x, 2); }

DefinabilityResult zp_membership_via_definability(const PadicNumber& a) {
  const Prime p = a.prime();
  const std::uint32_t n = p == 2 ? 3 : 2;
  const int precision = a.is_zero() ? kDefaultPrecision : a.precision();
  const auto one = PadicNumber::from_integer(1, p, precision);
  const auto scale = PadicNumber::from_integer(p, p, precision);
  DefinabilityResult out;
  out.exponent = n;
  out.z = one + scale * a.pow(n);
  out.claimed = is_nth_power(out.z, n);
  out.ground_truth = a.is_integral();
  if (out.claimed) out.witness = nth_root_with_valuation(out.z, n, precision);
  return out;
}

}  // namespace valkit
