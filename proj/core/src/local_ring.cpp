#include "valkit/local_ring.hpp"

#include <sstream>

#include "valkit/error.hpp"

namespace valkit {

namespace {

constexpr FiniteLocalRing::Code kTableLimit = 256;
constexpr std::uint64_t kMaxRingSize = 1U << 30;

}  // namespace

std::string to_string(RingKind kind) { return kind == RingKind::IntegersMod ? "zmod" : "trunc"; }

FiniteLocalRing FiniteLocalRing::integers_mod(Prime p, int n) { return FiniteLocalRing(RingKind::IntegersMod, p, n); }
FiniteLocalRing FiniteLocalRing::truncated(Prime p, int n) {
  return FiniteLocalRing(RingKind::TruncatedPolynomials, p, n);
}
FiniteLocalRing FiniteLocalRing::make(RingKind kind, Prime p, int n) { return FiniteLocalRing(kind, p, n); }

FiniteLocalRing::FiniteLocalRing(RingKind kind, Prime p, int n) : kind_(kind), p_(p), n_(n), size_(0) {
  require_prime(p);
  if (n < 1) fail(ErrorKind::InvalidArgument, "nilpotency index must be at least 1");
  const BigInt size = prime_power(p, n);
  if (size > kMaxRingSize) fail(ErrorKind::DomainTooLarge, "ring of size " + valkit::to_string(size) + " is too large");
  size_ = static_cast<Code>(size);
  if (size_ <= kTableLimit) {
    auto add = std::make_shared<std::vector<Code>>(static_cast<std::size_t>(size_) * size_);
    auto mul = std::make_shared<std::vector<Code>>(static_cast<std::size_t>(size_) * size_);
    for (Code a = 0; a < size_; ++a) {
      for (Code b = 0; b < size_; ++b) {
        (*add)[static_cast<std::size_t>(a) * size_ + b] = slow_add(a, b);
        (*mul)[static_cast<std::size_t>(a) * size_ + b] = slow_mul(a, b);
      }
    }
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
  }
}

std::string FiniteLocalRing::name() const {
  std::ostringstream os;
  if (kind_ == RingKind::IntegersMod) {
    os << "Z/" << size_;
  } else {
    os << "F_" << p_ << "[t]/(t^" << n_ << ")";
  }
  return os.str();
}

FiniteLocalRing::Code FiniteLocalRing::from_integer(std::int64_t k) const {
  if (kind_ == RingKind::IntegersMod) {
    const auto m = static_cast<std::int64_t>(size_);
    return static_cast<Code>(((k % m) + m) % m);
  }
  return static_cast<Code>(((k % p_) + p_) % p_);
}

FiniteLocalRing::Code FiniteLocalRing::slow_add(Code a, Code b) const {
  if (kind_ == RingKind::IntegersMod) return static_cast<Code>((std::uint64_t{a} + b) % size_);
  Code out = 0;
  Code place = 1;
  const auto p = static_cast<Code>(p_);
  for (int i = 0; i < n_; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

FiniteLocalRing::Code FiniteLocalRing::slow_mul(Code a, Code b) const {
  if (kind_ == RingKind::IntegersMod) return static_cast<Code>((std::uint64_t{a} * b) % size_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::int64_t> prod(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; i + j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  return from_digits(prod);
}

FiniteLocalRing::Code FiniteLocalRing::add(Code a, Code b) const {
  if (add_table_) return (*add_table_)[static_cast<std::size_t>(a) * size_ + b];
  return slow_add(a, b);
}

FiniteLocalRing::Code FiniteLocalRing::mul(Code a, Code b) const {
  if (mul_table_) return (*mul_table_)[static_cast<std::size_t>(a) * size_ + b];
  return slow_mul(a, b);
}

FiniteLocalRing::Code FiniteLocalRing::neg(Code a) const {
  if (kind_ == RingKind::IntegersMod) return a == 0 ? 0 : size_ - a;
  auto d = digits(a);
  for (auto& x : d) x = (p_ - x) % p_;
  return from_digits(d);
}

FiniteLocalRing::Code FiniteLocalRing::pow(Code a, std::uint64_t e) const {
  Code result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

std::vector<std::int64_t> FiniteLocalRing::digits(Code a) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_));
  for (auto& d : out) {
    d = a % p_;
    a /= static_cast<Code>(p_);
  }
  return out;
}

FiniteLocalRing::Code FiniteLocalRing::from_digits(const std::vector<std::int64_t>& digits) const {
  if (digits.size() != static_cast<std::size_t>(n_)) fail(ErrorKind::ArityMismatch, "expected one digit per power of t");
  Code out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= p_) fail(ErrorKind::InvalidArgument, "digit out of range [0, p)");
    out = out * static_cast<Code>(p_) + static_cast<Code>(digits[i]);
  }
  return out;
}

std::string FiniteLocalRing::format(Code a) const {
  if (kind_ == RingKind::IntegersMod) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i > 0) {
      if (d[i] != 1) os << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::uint64_t FiniteLocalRing::characteristic() const {
  std::uint64_t k = 1;
  for (Code acc = one(); acc != zero(); acc = add(acc, one())) ++k;
  return k;
}

RingElement::RingElement(FiniteLocalRing ring, FiniteLocalRing::Code code) : ring_(std::move(ring)), code_(code) {
  if (code_ >= ring_.size()) fail(ErrorKind::InvalidArgument, "element code outside the ring");
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring().same_as(b.ring())) {
    fail(ErrorKind::RingMismatch, "elements of " + a.ring().name() + " and " + b.ring().name());
  }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.add(a.code_, b.code_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.sub(a.code_, b.code_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return {a.ring_, a.ring_.mul(a.code_, b.code_)};
}

std::vector<std::int64_t> digit_decompose(const RingElement& r) { return r.digits(); }

ResidueCharProbe residue_char_probe(const FiniteLocalRing& ring) {
  ResidueCharProbe out;
  out.characteristic = ring.characteristic();
  out.residue_field_order = static_cast<std::uint64_t>(ring.prime());
  out.lift_exists = out.characteristic == out.residue_field_order;
  return out;
}

}  // namespace valkit
