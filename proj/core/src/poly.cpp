#include "valkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "valkit/error.hpp"

namespace valkit {

Ring Ring::modulo(const BigInt& modulus) {
  if (modulus < 2) fail(ErrorKind::InvalidArgument, "ring modulus must be at least 2");
  return Ring(modulus);
}

BigInt Ring::reduce(const BigInt& x) const { return modulus_ ? floor_mod(x, *modulus_) : x; }

bool Ring::contains(const BigInt& x) const { return !modulus_ || (x >= 0 && x < *modulus_); }

std::string Ring::name() const { return modulus_ ? "Z/" + valkit::to_string(*modulus_) : "Z"; }

UniPoly::UniPoly(std::vector<BigInt> coefficients, Ring ring)
    : coefficients_(std::move(coefficients)), ring_(std::move(ring)) {
  normalize();
}

UniPoly UniPoly::constant(const BigInt& c, Ring ring) { return UniPoly({c}, std::move(ring)); }

UniPoly UniPoly::monomial(const BigInt& c, std::size_t degree, Ring ring) {
  std::vector<BigInt> cs(degree + 1);
  cs[degree] = c;
  return UniPoly(std::move(cs), std::move(ring));
}

void UniPoly::normalize() {
  for (auto& c : coefficients_) c = ring_.reduce(c);
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.size() - 1;
}

BigInt UniPoly::coefficient(std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : BigInt(0); }

BigInt UniPoly::evaluate(const BigInt& x) const { return evaluate_with_derivative(x).first; }

std::pair<BigInt, BigInt> UniPoly::evaluate_with_derivative(const BigInt& x) const {
  if (!ring_.contains(x)) fail(ErrorKind::RingMismatch, "point " + valkit::to_string(x) + " is not in " + ring_.name());
  BigInt value = 0;
  BigInt slope = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    slope = ring_.reduce(slope * x + value);
    value = ring_.reduce(value * x + *it);
  }
  return {value, slope};
}

UniPoly UniPoly::derivative() const {
  std::vector<BigInt> cs;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) cs.push_back(coefficients_[i] * i);
  return UniPoly(std::move(cs), ring_);
}

UniPoly UniPoly::shift(const BigInt& c) const {
  const auto parts = taylor_coefficients(*this);
  std::vector<BigInt> cs;
  for (const auto& q : parts) cs.push_back(q.evaluate(ring_.reduce(c)));
  return UniPoly(std::move(cs), ring_);
}

std::string UniPoly::to_string(const std::string& variable) const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      if (mag != 1) os << '*';
      os << variable;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!(a.ring_ == b.ring_)) fail(ErrorKind::RingMismatch, "polynomials over " + a.ring_.name() + " and " + b.ring_.name());
  std::vector<BigInt> cs(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coefficient(i) + b.coefficient(i);
  return UniPoly(std::move(cs), a.ring_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<BigInt> neg;
  for (const auto& c : b.coefficients_) neg.push_back(-c);
  return a + UniPoly(std::move(neg), b.ring_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.ring_ == b.ring_)) fail(ErrorKind::RingMismatch, "polynomials over " + a.ring_.name() + " and " + b.ring_.name());
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.ring_);
  std::vector<BigInt> cs(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) cs[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return UniPoly(std::move(cs), a.ring_);
}

std::vector<UniPoly> taylor_coefficients(const UniPoly& p) {
  const auto& cs = p.coefficients();
  if (cs.empty()) return {p};
  const std::size_t n = cs.size() - 1;
  // out[i][k - i] accumulates c_k * C(k, i).
  std::vector<std::vector<BigInt>> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i].assign(n - i + 1, 0);
  std::vector<BigInt> row{1};
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      std::vector<BigInt> next(k + 1);
      next[0] = 1;
      next[k] = 1;
      for (std::size_t i = 1; i < k; ++i) next[i] = row[i - 1] + row[i];
      row = std::move(next);
    }
    if (cs[k] == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) out[i][k - i] += cs[k] * row[i];
  }
  std::vector<UniPoly> result;
  for (auto& q : out) result.emplace_back(std::move(q), p.ring());
  return result;
}

MultiPoly::MultiPoly(std::size_t variables, const std::vector<std::pair<Exponents, BigInt>>& terms)
    : variables_(variables) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::constant(std::size_t variables, const BigInt& c) {
  MultiPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) fail(ErrorKind::ArityMismatch, "variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  MultiPoly p(variables);
  p.add_term(e, 1);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != variables_) fail(ErrorKind::ArityMismatch, "exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint32_t> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  std::optional<std::uint32_t> d;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : e) s += k;
    if (d && *d != s) return false;
    d = s;
  }
  return true;
}

BigInt MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(variables_, 0));
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point, const std::optional<BigInt>& modulus) const {
  if (point.size() != variables_)
    fail(ErrorKind::ArityMismatch, "expected " + std::to_string(variables_) + " coordinates, got " +
                                       std::to_string(point.size()));
  std::vector<std::vector<BigInt>> powers(variables_);
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < variables_; ++i) {
      if (e[i] == 0) continue;
      auto& table = powers[i];
      if (table.empty()) table.push_back(1);
      while (table.size() <= e[i]) {
        BigInt next = table.back() * point[i];
        if (modulus) next %= *modulus;
        table.push_back(std::move(next));
      }
      term *= table[e[i]];
      if (modulus) term %= *modulus;
    }
    total += term;
  }
  return modulus ? floor_mod(total, *modulus) : total;
}

MultiPoly MultiPoly::partial_derivative(std::size_t index) const {
  if (index >= variables_) fail(ErrorKind::ArityMismatch, "variable index out of range");
  MultiPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents f = e;
    --f[index];
    out.add_term(f, c * e[index]);
  }
  return out;
}

UniPoly MultiPoly::restrict_to(std::size_t keep, std::span<const BigInt> point) const {
  if (point.size() != variables_ || keep >= variables_) fail(ErrorKind::ArityMismatch, "restriction point has the wrong length");
  std::vector<BigInt> cs;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < variables_; ++i)
      if (i != keep && e[i] > 0) term *= ipow(point[i], e[i]);
    if (cs.size() <= e[keep]) cs.resize(e[keep] + 1);
    cs[e[keep]] += term;
  }
  return UniPoly(std::move(cs));
}

MultiPoly MultiPoly::drop_variable(std::size_t index) const {
  if (index >= variables_) fail(ErrorKind::ArityMismatch, "variable index out of range");
  MultiPoly out(variables_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[index] != 0) continue;
    Exponents f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(index));
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
  MultiPoly result = constant(variables_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  // Highest degree first, then lexicographically largest exponent vector.
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  auto degree = [](const Exponents& e) {
    std::uint32_t s = 0;
    for (auto k : e) s += k;
    return s;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const auto da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_only = degree(e) == 0;
    bool wrote = false;
    if (constant_only || mag != 1) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << name(i);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

void require_same_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables())
    fail(ErrorKind::ArityMismatch, "polynomials in " + std::to_string(a.variables()) + " and " +
                                       std::to_string(b.variables()) + " variables");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const BigInt& c, const MultiPoly& a) { return MultiPoly::constant(a.variables(), c) * a; }

Form::Form(MultiPoly poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) fail(ErrorKind::NotHomogeneous, "the zero polynomial is not a form");
  if (!poly_.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "polynomial is not homogeneous: " + poly_.to_string());
  degree_ = *poly_.total_degree();
  if (degree_ == 0) fail(ErrorKind::NotHomogeneous, "a form needs degree at least 1");
}

BigInt form_evaluate(const Form& f, std::span<const BigInt> point, const std::optional<BigInt>& modulus) {
  return f.evaluate(point, modulus);
}

Form restrict_last_variable(const Form& f) {
  if (f.variables() < 2) fail(ErrorKind::ArityMismatch, "restriction needs at least two variables");
  MultiPoly g = f.poly().drop_variable(f.variables() - 1);
  if (g.is_zero()) fail(ErrorKind::BecameZero, "the last variable divides the form");
  return Form(std::move(g));
}

}  // namespace valkit
