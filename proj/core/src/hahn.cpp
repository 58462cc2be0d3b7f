#include "valkit/hahn.hpp"

#include <algorithm>
#include <map>

#include "valkit/detail/series_text.hpp"
#include "valkit/error.hpp"

namespace valkit {

namespace {

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

void require_same_group(const HahnSeries& a, const HahnSeries& b) {
  if (a.group() != b.group()) {
    fail(ErrorKind::GroupMismatch, "series over " + to_string(a.group()) + " and " + to_string(b.group()));
  }
  require_same_field(a.field(), b.field());
}

std::optional<Exponent> min_cap(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

std::string to_string(ExponentGroup group) {
  switch (group) {
    case ExponentGroup::Integers: return "Z";
    case ExponentGroup::Rationals: return "Q";
    case ExponentGroup::IntegerPairs: return "ZxZ";
  }
  return "?";
}

ExponentGroup parse_exponent_group(const std::string& text) {
  if (text == "Z") return ExponentGroup::Integers;
  if (text == "Q") return ExponentGroup::Rationals;
  if (text == "ZxZ" || text == "Z2" || text == "lex") return ExponentGroup::IntegerPairs;
  fail(ErrorKind::InvalidArgument, "unknown exponent group '" + text + "' (expected Z, Q or ZxZ)");
}

std::strong_ordering Exponent::operator<=>(const Exponent& other) const {
  if (major != other.major) return major < other.major ? std::strong_ordering::less : std::strong_ordering::greater;
  if (minor != other.minor) return minor < other.minor ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Exponent::belongs_to(ExponentGroup group) const {
  switch (group) {
    case ExponentGroup::Integers: return minor == 0 && is_integer(major);
    case ExponentGroup::Rationals: return minor == 0;
    case ExponentGroup::IntegerPairs: return is_integer(major) && is_integer(minor);
  }
  return false;
}

std::string Exponent::to_string(ExponentGroup group) const {
  return detail::render_exponent({major, minor, group == ExponentGroup::IntegerPairs});
}

HahnSeries HahnSeries::zero(ExponentGroup group, const CoefficientField& field) { return HahnSeries(group, field); }

HahnSeries HahnSeries::monomial(ExponentGroup group, const CoefficientField& field, const Rational& c,
                                const Exponent& e) {
  return from_terms(group, field, {{e, c}});
}

HahnSeries HahnSeries::from_terms(ExponentGroup group, const CoefficientField& field, std::vector<Term> terms,
                                  std::optional<Exponent> cap) {
  HahnSeries out(group, field);
  if (cap && !cap->belongs_to(group)) fail(ErrorKind::GroupMismatch, "cap is not in " + valkit::to_string(group));
  std::map<Exponent, Rational> merged;
  for (auto& [e, c] : terms) {
    if (!e.belongs_to(group)) fail(ErrorKind::GroupMismatch, "exponent is not in " + valkit::to_string(group));
    if (cap && e >= *cap) continue;
    auto& slot = merged[e];
    slot = field.add(slot, c);
  }
  for (auto& [e, c] : merged) {
    if (c != 0) out.terms_.emplace_back(e, c);
  }
  out.cap_ = std::move(cap);
  return out;
}

HahnSeries HahnSeries::parse(std::string_view text, ExponentGroup group, const CoefficientField& field) {
  const auto parsed = detail::parse_series_text(text);
  auto convert = [group](const detail::TextExponent& e) {
    const bool constant = !e.is_pair && e.major == 0;
    if (e.is_pair != (group == ExponentGroup::IntegerPairs) && !constant) {
      fail(ErrorKind::GroupMismatch, e.is_pair ? "pair exponent outside ZxZ" : "ZxZ series needs pair exponents (a,b)");
    }
    return Exponent(e.major, e.minor);
  };
  std::vector<Term> terms;
  for (const auto& t : parsed.terms) terms.emplace_back(convert(t.exponent), t.coefficient);
  std::optional<Exponent> cap;
  if (parsed.cap) cap = convert(*parsed.cap);
  return from_terms(group, field, std::move(terms), cap);
}

std::optional<Exponent> HahnSeries::valuation() const {
  if (!terms_.empty()) return terms_.front().first;
  if (cap_) fail(ErrorKind::PrecisionLoss, "no known term below the cap");
  return std::nullopt;
}

Rational HahnSeries::residue() const {
  if (terms_.empty()) {
    if (cap_ && *cap_ <= Exponent(0)) fail(ErrorKind::PrecisionLoss, "residue lies beyond the cap");
    return 0;
  }
  return terms_.front().first == Exponent(0) ? terms_.front().second : Rational(0);
}

Rational HahnSeries::angular_component() const {
  if (terms_.empty()) {
    if (cap_) fail(ErrorKind::PrecisionLoss, "no known term below the cap");
    return 0;
  }
  return terms_.front().second;
}

Rational HahnSeries::coefficient(const Exponent& e) const {
  if (cap_ && e >= *cap_) fail(ErrorKind::PrecisionLoss, "coefficient lies beyond the cap");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) { return t.first < x; });
  return it != terms_.end() && it->first == e ? it->second : Rational(0);
}

HahnSeries HahnSeries::operator-() const {
  HahnSeries out = *this;
  for (auto& [e, c] : out.terms_) c = field_.neg(c);
  return out;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
  require_same_group(a, b);
  std::vector<HahnSeries::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return HahnSeries::from_terms(a.group_, a.field_, std::move(terms), min_cap(a.cap_, b.cap_));
}

HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  require_same_group(a, b);
  // Unknown tails: a's known part times b's tail starts at min(v(a), cap a) + cap b.
  std::optional<Exponent> cap;
  auto low = [](const HahnSeries& s) { return s.terms_.empty() ? *s.cap_ : std::min(s.terms_.front().first, *s.cap_); };
  if (b.cap_ && (a.cap_ || !a.terms_.empty())) {
    cap = min_cap(cap, (a.cap_ ? low(a) : a.terms_.front().first) + *b.cap_);
  }
  if (a.cap_ && (b.cap_ || !b.terms_.empty())) {
    cap = min_cap(cap, (b.cap_ ? low(b) : b.terms_.front().first) + *a.cap_);
  }
  std::vector<HahnSeries::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ea + eb, a.field_.mul(ca, cb));
  }
  return HahnSeries::from_terms(a.group_, a.field_, std::move(terms), cap);
}

HahnSeries HahnSeries::inverse(const Exponent& cap, int max_terms) const {
  if (terms_.empty()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (!cap.belongs_to(group_)) fail(ErrorKind::GroupMismatch, "cap is not in " + valkit::to_string(group_));
  if (max_terms < 1) fail(ErrorKind::InvalidArgument, "max_terms must be positive");
  const Exponent gamma = terms_.front().first;
  const Rational c_inv = field_.inv(terms_.front().second);

  // f = 1 - t^-γ g / c, known below cap(g) - γ.
  std::optional<Exponent> f_cap;
  if (cap_) f_cap = *cap_ - gamma;
  std::vector<Term> f_terms;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    f_terms.emplace_back(terms_[i].first - gamma, field_.neg(field_.mul(terms_[i].second, c_inv)));
  }
  // g * g^-1 = (1 - f) Σ f^n, so the product cap is the cap for Σ f^n.
  Exponent relative = cap;
  if (f_cap) relative = std::min(relative, *f_cap);
  const HahnSeries f = from_terms(group_, field_, std::move(f_terms), relative);
  const HahnSeries f_exact = from_terms(group_, field_, f.terms_);

  HahnSeries sum = from_terms(group_, field_, {{Exponent(0), 1}}, relative);
  if (!f.terms_.empty()) {
    HahnSeries power = sum;
    for (int n = 1;; ++n) {
      power = from_terms(group_, field_, (power * f_exact).terms_, relative);
      if (power.terms_.empty()) break;
      if (n == max_terms) {
        relative = std::min(relative, power.terms_.front().first);
        break;
      }
      sum = sum + power;
    }
    sum = from_terms(group_, field_, sum.terms_, relative);
  }
  std::vector<Term> out;
  for (const auto& [e, c] : sum.terms_) out.emplace_back(e - gamma, field_.mul(c, c_inv));
  return from_terms(group_, field_, std::move(out), relative - gamma);
}

std::string HahnSeries::to_string() const {
  std::vector<detail::TextTerm> terms;
  const bool pairs = group_ == ExponentGroup::IntegerPairs;
  for (const auto& [e, c] : terms_) terms.push_back({c, {e.major, e.minor, pairs}});
  std::optional<detail::TextExponent> cap;
  if (cap_) cap = detail::TextExponent{cap_->major, cap_->minor, pairs};
  return detail::render_series(terms, cap);
}

std::ostream& operator<<(std::ostream& os, const HahnSeries& f) { return os << f.to_string(); }

std::vector<std::pair<Exponent, Exponent>> convolution_pairs(const std::vector<Exponent>& a,
                                                             const std::vector<Exponent>& b, const Exponent& gamma) {
  std::vector<std::pair<Exponent, Exponent>> out;
  std::size_t i = 0;
  std::size_t j = b.size();
  while (i < a.size() && j > 0) {
    const Exponent s = a[i] + b[j - 1];
    if (s == gamma) {
      out.emplace_back(a[i], b[j - 1]);
      ++i;
      --j;
    } else if (s < gamma) {
      ++i;
    } else {
      --j;
    }
  }
  return out;
}

}  // namespace valkit
