#include "valkit/forms.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "valkit/error.hpp"
#include "valkit/hensel.hpp"

namespace valkit {

namespace {

/// f reduced mod p as machine words, for the exhaustive loops.
struct ResiduePoly {
  std::uint64_t p = 2;
  std::size_t variables = 0;
  std::vector<std::uint64_t> coefficients;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> factors;
  std::vector<std::uint32_t> max_exponent;

  ResiduePoly(const MultiPoly& f, Prime prime) : p(static_cast<std::uint64_t>(prime)), variables(f.variables()) {
    max_exponent.assign(variables, 0);
    for (const auto& [e, c] : f.terms()) {
      const auto reduced = static_cast<std::uint64_t>(floor_mod(c, BigInt(prime)));
      if (reduced == 0) continue;
      coefficients.push_back(reduced);
      auto& fs = factors.emplace_back();
      for (std::size_t i = 0; i < variables; ++i) {
        if (e[i] == 0) continue;
        fs.emplace_back(i, e[i]);
        max_exponent[i] = std::max(max_exponent[i], e[i]);
      }
    }
  }
};

/// Walks F_p^n in lexicographic order with the first coordinate restricted to
/// [first_lo, first_hi), keeping per-coordinate power tables current.
template <class Visit>
void enumerate_points(const ResiduePoly& f, std::uint64_t first_lo, std::uint64_t first_hi, Visit&& visit) {
  const std::size_t n = f.variables;
  std::vector<std::uint64_t> x(n, 0);
  std::vector<std::vector<std::uint64_t>> powers(n);
  auto refresh = [&](std::size_t i) {
    auto& table = powers[i];
    table.assign(f.max_exponent[i] + 1, 1);
    for (std::size_t k = 1; k < table.size(); ++k) table[k] = table[k - 1] * x[i] % f.p;
  };
  x[0] = first_lo;
  for (std::size_t i = 0; i < n; ++i) refresh(i);
  while (true) {
    std::uint64_t value = 0;
    for (std::size_t t = 0; t < f.coefficients.size(); ++t) {
      std::uint64_t term = f.coefficients[t];
      for (const auto& [i, k] : f.factors[t]) term = term * powers[i][k] % f.p;
      value += term;
      if (value >= f.p) value -= f.p;
    }
    if (!visit(x, value)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < (i == 0 ? first_hi : f.p)) {
        refresh(i);
        break;
      }
      if (i == 0) return;
      x[i] = 0;
      refresh(i);
    }
  }
}

void guard_domain(Prime p, std::size_t n, std::uint64_t budget) {
  if (p >= (Prime{1} << 31)) fail(ErrorKind::DomainTooLarge, "prime too large for exhaustive enumeration");
  BigInt size = prime_power(p, static_cast<std::int64_t>(n));
  if (size > budget) {
    fail(ErrorKind::DomainTooLarge, "p^n = " + to_string(size) + " exceeds the enumeration budget " + std::to_string(budget));
  }
}

std::vector<std::int64_t> to_signed(const std::vector<std::uint64_t>& x) { return {x.begin(), x.end()}; }

bool is_nonzero(const std::vector<std::uint64_t>& x) {
  return std::any_of(x.begin(), x.end(), [](auto c) { return c != 0; });
}

Valuation valuation_of(const BigInt& n, Prime p) { return n == 0 ? Valuation::infinity() : Valuation(p_adic_order(n, p)); }

PadicNumber coordinate(const BigInt& rep, Prime p, std::int64_t precision) {
  if (floor_mod(rep, prime_power(p, precision)) == 0) return PadicNumber::zero(p);
  return PadicNumber::from_residue_class(rep, p, precision);
}

}  // namespace

ZeroCount count_zeros_ff(const MultiPoly& f, Prime p, std::uint64_t budget) {
  require_prime(p);
  const std::size_t n = f.variables();
  ZeroCount out{n, p, 0, std::nullopt};
  if (n == 0) {
    out.count = floor_mod(f.constant_term(), BigInt(p)) == 0 ? 1 : 0;
    return out;
  }
  guard_domain(p, n, budget);
  const ResiduePoly residue(f, p);

  struct Partial {
    std::uint64_t count = 0;
    std::optional<std::vector<std::int64_t>> first;
  };
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, up);
  std::vector<std::future<Partial>> parts;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = up * w / workers;
    const std::uint64_t hi = up * (w + 1) / workers;
    parts.push_back(std::async(std::launch::async, [&residue, lo, hi] {
      Partial part;
      if (lo == hi) return part;
      enumerate_points(residue, lo, hi, [&](const std::vector<std::uint64_t>& x, std::uint64_t value) {
        if (value == 0) {
          ++part.count;
          if (!part.first && is_nonzero(x)) part.first = to_signed(x);
        }
        return true;
      });
      return part;
    }));
  }
  for (auto& fut : parts) {
    Partial part = fut.get();
    out.count += part.count;
    if (!out.nontrivial_zero && part.first) out.nontrivial_zero = std::move(part.first);
  }
  return out;
}

ChevalleyReport chevalley_warning_check(const MultiPoly& f, Prime p, std::uint64_t budget) {
  const auto degree = f.total_degree();
  if (!degree || *degree == 0) fail(ErrorKind::HypothesisFailed, "Chevalley-Warning needs a nonconstant polynomial");
  const std::size_t n = f.variables();
  if (n <= *degree) {
    fail(ErrorKind::HypothesisFailed,
         "Chevalley-Warning needs more variables (" + std::to_string(n) + ") than the degree (" +
             std::to_string(*degree) + ")");
  }
  ChevalleyReport report;
  report.zeros = count_zeros_ff(f, p, budget);
  report.degree = *degree;
  report.exponent = static_cast<std::uint32_t>((n - 1) / *degree);
  report.modulus = prime_power(p, report.exponent);
  report.divisible = BigInt(report.zeros.count) % report.modulus == 0;
  report.has_constant_term = floor_mod(f.constant_term(), BigInt(p)) != 0;
  report.nontrivial_zero_found = report.zeros.nontrivial_zero.has_value();
  return report;
}

PadicZeroCertificate lift_candidate(const MultiPoly& poly, Prime p, const std::vector<BigInt>& start,
                                    std::int64_t precision, std::optional<std::size_t> pivot) {
  require_prime(p);
  const std::size_t n = poly.variables();
  if (start.size() != n) fail(ErrorKind::ArityMismatch, "starting vector has the wrong length");
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
  if (pivot && *pivot >= n) fail(ErrorKind::ArityMismatch, "pivot index out of range");

  std::vector<Valuation> slopes(n);
  for (std::size_t i = 0; i < n; ++i) slopes[i] = valuation_of(poly.partial_derivative(i).evaluate(start), p);
  const std::size_t chosen =
      pivot ? *pivot : static_cast<std::size_t>(std::min_element(slopes.begin(), slopes.end()) - slopes.begin());

  PadicZeroCertificate cert;
  cert.prime = p;
  cert.precision = precision;
  cert.pivot = chosen;
  cert.pivot_gradient_valuation = n == 0 ? Valuation::infinity() : slopes[chosen];
  cert.representatives = start;

  const BigInt value = poly.evaluate(start);
  if (value != 0) {
    if (cert.pivot_gradient_valuation.is_infinite()) {
      fail(ErrorKind::HypothesisFailed, "gradient vanishes in the pivot coordinate");
    }
    const std::int64_t e = cert.pivot_gradient_valuation.value();
    if (p_adic_order(value, p) <= 2 * e) {
      fail(ErrorKind::HypothesisFailed, "v(F(x)) = " + std::to_string(p_adic_order(value, p)) +
                                            " does not exceed 2 v(dF/dx_i) = " + std::to_string(2 * e));
    }
    const UniPoly slice = poly.restrict_to(chosen, start);
    cert.representatives[chosen] = newton_lift(slice, start[chosen], p, precision).root;
  }

  cert.value_valuation = valuation_of(poly.evaluate(cert.representatives), p);
  cert.primitive = std::any_of(cert.representatives.begin(), cert.representatives.end(),
                               [p](const BigInt& c) { return c % p != 0; });
  for (const auto& rep : cert.representatives) cert.coordinates.push_back(coordinate(rep, p, precision));
  if (!verify_certificate(poly, cert)) fail(ErrorKind::PrecisionLoss, "lifted vector failed re-verification");
  return cert;
}

PadicZeroCertificate lift_residue_zero(const MultiPoly& poly, Prime p, const std::vector<std::int64_t>& residue_zero,
                                       std::int64_t precision) {
  require_prime(p);
  if (residue_zero.size() != poly.variables()) fail(ErrorKind::ArityMismatch, "residue zero has the wrong length");
  std::vector<BigInt> start;
  for (auto c : residue_zero) start.push_back(floor_mod(BigInt(c), BigInt(p)));
  if (poly.evaluate(start, BigInt(p)) != 0) fail(ErrorKind::InvalidArgument, "vector is not a zero mod p");
  for (std::size_t i = 0; i < poly.variables(); ++i) {
    if (poly.partial_derivative(i).evaluate(start, BigInt(p)) != 0) return lift_candidate(poly, p, start, precision, i);
  }
  fail(ErrorKind::SingularResidueZero, "every partial derivative vanishes mod p at the residue zero");
}

bool verify_certificate(const MultiPoly& poly, const PadicZeroCertificate& c) {
  const std::size_t n = poly.variables();
  if (c.representatives.size() != n || c.coordinates.size() != n) return false;
  const BigInt modulus = prime_power(c.prime, c.precision);
  const BigInt value = poly.evaluate(c.representatives);
  if (value % modulus != 0) return false;
  if (valuation_of(value, c.prime) != c.value_valuation) return false;
  const bool primitive = std::any_of(c.representatives.begin(), c.representatives.end(),
                                     [&](const BigInt& x) { return x % c.prime != 0; });
  if (primitive != c.primitive) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = c.coordinates[i];
    const BigInt rep = x.is_zero() ? BigInt(0) : x.representative();
    if (floor_mod(rep - c.representatives[i], modulus) != 0) return false;
  }
  return true;
}

ZeroSearchResult padic_zero_search(const Form& form, Prime p, const ZeroSearchOptions& options) {
  require_prime(p);
  if (options.target_precision < 1) fail(ErrorKind::InvalidArgument, "target precision must be positive");
  const MultiPoly& f = form.poly();
  const std::size_t n = f.variables();
  guard_domain(p, n, options.budget);

  ZeroSearchResult result;
  const ResiduePoly residue(f, p);
  std::vector<std::vector<std::uint64_t>> residue_zeros;
  enumerate_points(residue, 0, static_cast<std::uint64_t>(p), [&](const std::vector<std::uint64_t>& x, std::uint64_t v) {
    if (v == 0 && is_nonzero(x)) residue_zeros.push_back(x);
    return true;
  });

  std::vector<MultiPoly> gradient;
  for (std::size_t i = 0; i < n; ++i) gradient.push_back(f.partial_derivative(i));

  auto try_candidate = [&](const std::vector<BigInt>& x) -> std::optional<PadicZeroCertificate> {
    ++result.candidates;
    const BigInt value = f.evaluate(x);
    std::optional<std::size_t> pivot;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt g = gradient[i].evaluate(x);
      if (g == 0) continue;
      const std::int64_t e = p_adic_order(g, p);
      if (!pivot || e < best) {
        pivot = i;
        best = e;
      }
    }
    if (value != 0 && (!pivot || p_adic_order(value, p) <= 2 * best)) return std::nullopt;
    return lift_candidate(f, p, x, options.target_precision, pivot.value_or(0));
  };

  for (int m = 1; m <= options.depth_cap; ++m) {
    if (residue_zeros.empty()) {
      result.levels_searched.push_back(m);
      continue;
    }
    const BigInt lifts = prime_power(p, static_cast<std::int64_t>((m - 1) * n));
    if (lifts * residue_zeros.size() > options.budget) {
      for (int k = m; k <= options.depth_cap; ++k) result.levels_skipped.push_back(k);
      break;
    }
    const auto lift_count = static_cast<std::uint64_t>(lifts);
    const BigInt pp = BigInt(p);
    const BigInt step_modulus = prime_power(p, m - 1);
    for (const auto& r : residue_zeros) {
      for (std::uint64_t index = 0; index < lift_count; ++index) {
        // index written in base p^(m-1), one digit per coordinate.
        std::vector<BigInt> x(n);
        BigInt rest = index;
        for (std::size_t i = n; i-- > 0;) {
          x[i] = BigInt(r[i]) + pp * (rest % step_modulus);
          rest /= step_modulus;
        }
        if (auto cert = try_candidate(x)) {
          result.levels_searched.push_back(m);
          result.certificate = std::move(cert);
          return result;
        }
      }
    }
    result.levels_searched.push_back(m);
  }
  return result;
}

}  // namespace valkit
