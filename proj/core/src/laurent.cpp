#include "valkit/laurent.hpp"

#include <algorithm>
#include <map>

#include "valkit/detail/series_text.hpp"
#include "valkit/error.hpp"

namespace valkit {

LaurentSeries LaurentSeries::zero(const CoefficientField& field) { return LaurentSeries(field, 0, {}, std::nullopt); }

LaurentSeries LaurentSeries::constant(const CoefficientField& field, const Rational& c) {
  return monomial(field, c, 0);
}

LaurentSeries LaurentSeries::monomial(const CoefficientField& field, const Rational& c, std::int64_t exponent) {
  const Rational n = field.normalize(c);
  if (n == 0) return zero(field);
  return LaurentSeries(field, exponent, {n}, std::nullopt);
}

LaurentSeries LaurentSeries::from_terms(const CoefficientField& field,
                                        const std::vector<std::pair<std::int64_t, Rational>>& terms,
                                        std::optional<std::int64_t> absolute_cap) {
  std::map<std::int64_t, Rational> merged;
  for (const auto& [e, c] : terms) {
    if (absolute_cap && e >= *absolute_cap) continue;
    merged[e] = field.add(merged[e], c);
  }
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  if (merged.empty()) {
    if (absolute_cap) fail(ErrorKind::PrecisionLoss, "no known nonzero coefficient below the cap");
    return zero(field);
  }
  const std::int64_t v = merged.begin()->first;
  const std::int64_t last = absolute_cap ? *absolute_cap - 1 : merged.rbegin()->first;
  std::vector<Rational> dense(static_cast<std::size_t>(last - v + 1), Rational(0));
  for (const auto& [e, c] : merged) dense[static_cast<std::size_t>(e - v)] = c;
  std::optional<std::int64_t> precision;
  if (absolute_cap) precision = *absolute_cap - v;
  return LaurentSeries(field, v, std::move(dense), precision);
}

LaurentSeries LaurentSeries::truncated(const CoefficientField& field, std::int64_t offset,
                                       const std::vector<Rational>& coefficients) {
  if (coefficients.empty()) fail(ErrorKind::InvalidArgument, "a truncated series needs a window");
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    terms.emplace_back(offset + static_cast<std::int64_t>(i), coefficients[i]);
  }
  return from_terms(field, terms, offset + static_cast<std::int64_t>(coefficients.size()));
}

LaurentSeries LaurentSeries::parse(std::string_view text, const CoefficientField& field) {
  const auto parsed = detail::parse_series_text(text);
  auto integer_exponent = [](const detail::TextExponent& e) {
    if (e.is_pair || boost::multiprecision::denominator(e.major) != 1) {
      fail(ErrorKind::GroupMismatch, "Laurent series take integer exponents only");
    }
    return to_int64(boost::multiprecision::numerator(e.major));
  };
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (const auto& term : parsed.terms) {
    terms.emplace_back(integer_exponent(term.exponent), field.normalize(term.coefficient));
  }
  std::optional<std::int64_t> cap;
  if (parsed.cap) cap = integer_exponent(*parsed.cap);
  return from_terms(field, terms, cap);
}

Valuation LaurentSeries::valuation() const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(valuation_);
}

std::optional<std::int64_t> LaurentSeries::absolute_precision() const {
  if (!precision_) return std::nullopt;
  return valuation_ + *precision_;
}

Rational LaurentSeries::coefficient(std::int64_t exponent) const {
  if (precision_ && exponent >= valuation_ + *precision_) {
    fail(ErrorKind::PrecisionLoss, "coefficient of t^" + std::to_string(exponent) + " is beyond the known window");
  }
  if (is_zero() || exponent < valuation_) return 0;
  const auto index = static_cast<std::size_t>(exponent - valuation_);
  return index < coefficients_.size() ? coefficients_[index] : Rational(0);
}

Rational LaurentSeries::residue() const {
  if (is_zero() || valuation_ != 0) return 0;
  return coefficients_.front();
}

Rational LaurentSeries::angular_component() const { return is_zero() ? Rational(0) : coefficients_.front(); }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coefficients_) c = field_.neg(c);
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto cap_a = a.absolute_precision();
  const auto cap_b = b.absolute_precision();
  std::optional<std::int64_t> cap;
  if (cap_a && cap_b) {
    cap = std::min(*cap_a, *cap_b);
  } else {
    cap = cap_a ? cap_a : cap_b;
  }
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (const auto* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->coefficients_.size(); ++i) {
      terms.emplace_back(s->valuation_ + static_cast<std::int64_t>(i), s->coefficients_[i]);
    }
  }
  return LaurentSeries::from_terms(a.field_, terms, cap);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  std::optional<std::int64_t> k;
  if (a.precision_ && b.precision_) {
    k = std::min(*a.precision_, *b.precision_);
  } else {
    k = a.precision_ ? a.precision_ : b.precision_;
  }
  const std::size_t la = a.coefficients_.size();
  const std::size_t lb = b.coefficients_.size();
  std::size_t width = la + lb - 1;
  if (k) width = std::min(width, static_cast<std::size_t>(*k));
  std::vector<Rational> product(width, Rational(0));
  for (std::size_t i = 0; i < la && i < width; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < lb && i + j < width; ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  for (auto& c : product) c = a.field_.normalize(c);
  if (k) product.resize(static_cast<std::size_t>(*k), Rational(0));
  while (!k && !product.empty() && product.back() == 0) product.pop_back();
  // The leading coefficient is a product of two nonzero field elements.
  return LaurentSeries(a.field_, a.valuation_ + b.valuation_, std::move(product), k);
}

LaurentSeries LaurentSeries::inverse(std::int64_t precision) const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of the zero series");
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
  const std::int64_t k = precision_ ? std::min(*precision_, precision) : precision;
  const auto width = static_cast<std::size_t>(k);
  // this = c t^γ (1 - f), f = -(c^{-1} a_{γ+i}) t^i for i >= 1.
  const Rational c_inv = field_.inv(coefficients_.front());
  std::vector<Rational> f(width, Rational(0));
  for (std::size_t i = 1; i < width && i < coefficients_.size(); ++i) {
    f[i] = field_.neg(field_.mul(c_inv, coefficients_[i]));
  }
  // Σ f^n; f^n vanishes below t^width once n >= width since v(f) >= 1.
  std::vector<Rational> sum(width, Rational(0));
  std::vector<Rational> power(width, Rational(0));
  sum[0] = 1;
  power[0] = 1;
  for (std::size_t n = 1; n < width; ++n) {
    std::vector<Rational> next(width, Rational(0));
    bool nonzero = false;
    for (std::size_t i = 0; i < width; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 1; i + j < width; ++j) {
        if (f[j] == 0) continue;
        next[i + j] += power[i] * f[j];
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      next[i] = field_.normalize(next[i]);
      if (next[i] != 0) nonzero = true;
      sum[i] = field_.add(sum[i], next[i]);
    }
    if (!nonzero) break;
    power = std::move(next);
  }
  for (auto& s : sum) s = field_.mul(s, c_inv);
  return LaurentSeries(field_, -valuation_, std::move(sum), k);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  const std::int64_t k = b.precision_.value_or(a.precision_.value_or(kDefaultPrecision));
  return a * b.inverse(k);
}

LaurentSeries LaurentSeries::pow(std::int64_t exponent, std::int64_t precision) const {
  if (exponent < 0) return inverse(precision).pow(-exponent, precision);
  LaurentSeries result = constant(field_, 1);
  LaurentSeries base = *this;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentSeries LaurentSeries::with_precision(std::int64_t precision) const {
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
  if (is_zero()) return *this;
  if (precision_ && *precision_ <= precision) return *this;
  std::vector<Rational> window(static_cast<std::size_t>(precision), Rational(0));
  for (std::size_t i = 0; i < window.size() && i < coefficients_.size(); ++i) window[i] = coefficients_[i];
  return LaurentSeries(field_, valuation_, std::move(window), precision);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  if (!(field_ == other.field_)) return false;
  // Zero is always exact, so it agrees only with itself.
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  if (valuation_ != other.valuation_) return false;
  std::size_t k = std::max(coefficients_.size(), other.coefficients_.size());
  if (precision_) k = std::min(k, static_cast<std::size_t>(*precision_));
  if (other.precision_) k = std::min(k, static_cast<std::size_t>(*other.precision_));
  for (std::size_t i = 0; i < k; ++i) {
    const Rational x = i < coefficients_.size() ? coefficients_[i] : Rational(0);
    const Rational y = i < other.coefficients_.size() ? other.coefficients_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

std::string LaurentSeries::to_string() const {
  std::vector<detail::TextTerm> terms;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    terms.push_back({coefficients_[i], {Rational(valuation_ + static_cast<std::int64_t>(i)), 0, false}});
  }
  std::optional<detail::TextExponent> cap;
  if (const auto abs = absolute_precision()) cap = detail::TextExponent{Rational(*abs), 0, false};
  return detail::render_series(terms, cap);
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& x) { return os << x.to_string(); }

}  // namespace valkit
