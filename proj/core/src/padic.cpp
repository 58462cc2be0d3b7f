#include "valkit/padic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "valkit/error.hpp"

namespace valkit {

namespace {

void require_positive_precision(std::int64_t precision) {
  if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
}

BigInt from_base_p(const std::vector<std::int64_t>& digits, Prime p) {
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * p + *it;
  return value;
}

}  // namespace

std::vector<std::int64_t> base_p_digits(const BigInt& n, Prime p, std::size_t count) {
  std::vector<std::int64_t> digits(count, 0);
  BigInt rest = n;
  const BigInt bp = p;
  for (std::size_t i = 0; i < count && rest != 0; ++i) {
    digits[i] = static_cast<std::int64_t>(rest % bp);
    rest /= bp;
  }
  return digits;
}

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.prime() != b.prime()) {
    fail(ErrorKind::PrimeMismatch, "p-adic operands over different primes: " +
                                       std::to_string(a.prime()) + " vs " + std::to_string(b.prime()));
  }
}

PadicNumber PadicNumber::zero(Prime p) {
  require_prime(p);
  return PadicNumber(p, 0, {});
}

PadicNumber PadicNumber::from_integer(const BigInt& n, Prime p, int precision) {
  return from_rational(n, BigInt(1), p, precision);
}

PadicNumber PadicNumber::from_rational(const Rational& r, Prime p, int precision) {
  return from_rational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r), p,
                       precision);
}

PadicNumber PadicNumber::from_rational(const BigInt& num, const BigInt& den, Prime p, int precision) {
  require_prime(p);
  require_positive_precision(precision);
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num == 0) return PadicNumber(p, 0, {});
  BigInt n = num;
  BigInt d = den;
  const std::int64_t v = strip_prime(n, p) - strip_prime(d, p);
  const BigInt modulus = prime_power(p, precision);
  const BigInt unit = floor_mod(n * inverse_mod(d, modulus), modulus);
  return PadicNumber(p, v, base_p_digits(unit, p, static_cast<std::size_t>(precision)));
}

PadicNumber PadicNumber::from_residue_class(const BigInt& value, Prime p, std::int64_t absolute_precision) {
  require_prime(p);
  require_positive_precision(absolute_precision);
  BigInt reduced = floor_mod(value, prime_power(p, absolute_precision));
  if (reduced == 0) {
    fail(ErrorKind::PrecisionLoss, "value vanishes modulo p^" + std::to_string(absolute_precision));
  }
  const std::int64_t v = strip_prime(reduced, p);
  return PadicNumber(p, v, base_p_digits(reduced, p, static_cast<std::size_t>(absolute_precision - v)));
}

PadicNumber PadicNumber::from_unit(Prime p, std::int64_t valuation, const BigInt& unit, int precision) {
  require_prime(p);
  require_positive_precision(precision);
  const BigInt reduced = floor_mod(unit, prime_power(p, precision));
  if (reduced % p == 0) fail(ErrorKind::InvalidArgument, "unit part is divisible by p");
  return PadicNumber(p, valuation, base_p_digits(reduced, p, static_cast<std::size_t>(precision)));
}

PadicNumber PadicNumber::from_digits(Prime p, std::int64_t valuation, std::vector<std::int64_t> digits) {
  require_prime(p);
  for (auto d : digits) {
    if (d < 0 || d >= p) fail(ErrorKind::InvalidArgument, "digit out of range [0, p)");
  }
  if (digits.empty()) fail(ErrorKind::InvalidArgument, "a non-zero p-adic number needs digits");
  const auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
  if (first == digits.end()) fail(ErrorKind::PrecisionLoss, "all trusted digits are zero");
  const auto shift = first - digits.begin();
  digits.erase(digits.begin(), first);
  return PadicNumber(p, valuation + shift, std::move(digits));
}

Valuation PadicNumber::valuation() const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(valuation_);
}

std::optional<std::int64_t> PadicNumber::absolute_precision() const {
  if (is_zero()) return std::nullopt;
  return valuation_ + precision();
}

BigInt PadicNumber::unit() const { return from_base_p(digits_, prime_); }

BigInt PadicNumber::representative() const {
  if (is_zero()) return 0;
  if (valuation_ < 0) fail(ErrorKind::InvalidArgument, "representative requires a p-adic integer");
  return prime_power(prime_, valuation_) * unit();
}

Rational PadicNumber::to_rational() const {
  if (is_zero()) return 0;
  const Rational u(unit());
  if (valuation_ >= 0) return u * Rational(prime_power(prime_, valuation_));
  return u / Rational(prime_power(prime_, -valuation_));
}

std::int64_t PadicNumber::residue() const {
  if (is_zero() || valuation_ != 0) return 0;
  return digits_.front();
}

std::int64_t PadicNumber::angular_component() const { return is_zero() ? 0 : digits_.front(); }

PadicNumber PadicNumber::operator-() const {
  if (is_zero()) return *this;
  const BigInt modulus = prime_power(prime_, precision());
  return PadicNumber(prime_, valuation_, base_p_digits(modulus - unit(), prime_, digits_.size()));
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const PadicNumber& lo = a.valuation_ <= b.valuation_ ? a : b;
  const PadicNumber& hi = a.valuation_ <= b.valuation_ ? b : a;
  const Prime p = a.prime_;
  const std::int64_t shift = hi.valuation_ - lo.valuation_;
  const std::int64_t absolute = std::min(*lo.absolute_precision(), *hi.absolute_precision());
  const std::int64_t width = absolute - lo.valuation_;
  const BigInt modulus = prime_power(p, width);
  BigInt sum = lo.unit();
  if (shift < width) sum += hi.unit() * prime_power(p, shift);
  sum = floor_mod(sum, modulus);
  if (sum == 0) {
    fail(ErrorKind::PrecisionLoss,
         "sum cancels every trusted digit below p^" + std::to_string(absolute));
  }
  const std::int64_t cancelled = strip_prime(sum, p);
  return PadicNumber(p, lo.valuation_ + cancelled,
                     base_p_digits(sum, p, static_cast<std::size_t>(width - cancelled)));
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const int k = std::min(a.precision(), b.precision());
  const BigInt modulus = prime_power(a.prime_, k);
  const BigInt product = floor_mod(a.unit() * b.unit(), modulus);
  return PadicNumber(a.prime_, a.valuation_ + b.valuation_,
                     base_p_digits(product, a.prime_, static_cast<std::size_t>(k)));
}

PadicNumber PadicNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of p-adic zero");
  const BigInt modulus = prime_power(prime_, precision());
  return PadicNumber(prime_, -valuation_, base_p_digits(inverse_mod(unit(), modulus), prime_, digits_.size()));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inverse(); }

PadicNumber PadicNumber::pow(std::uint64_t exponent) const {
  if (exponent == 0) return from_integer(1, prime_, std::max(precision(), 1));
  if (is_zero()) return *this;
  const BigInt modulus = prime_power(prime_, precision());
  const BigInt u = boost::multiprecision::powm(unit(), BigInt(exponent), modulus);
  return PadicNumber(prime_, valuation_ * static_cast<std::int64_t>(exponent),
                     base_p_digits(u, prime_, digits_.size()));
}

PadicNumber PadicNumber::with_precision(int precision) const {
  require_positive_precision(precision);
  if (is_zero() || precision >= this->precision()) return *this;
  return PadicNumber(prime_, valuation_,
                     std::vector<std::int64_t>(digits_.begin(), digits_.begin() + precision));
}

bool PadicNumber::agrees_with(const PadicNumber& other) const {
  if (prime_ != other.prime_) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  if (valuation_ != other.valuation_) return false;
  const auto k = std::min(digits_.size(), other.digits_.size());
  return std::equal(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k), other.digits_.begin());
}

std::string PadicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const std::string p = std::to_string(prime_);
  os << p << "^" << valuation_ << " * (";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    os << digits_[i];
    if (i == 1) os << "*" << p;
    if (i > 1) os << "*" << p << "^" << i;
    os << " + ";
  }
  os << "O(" << p << "^" << digits_.size() << "))";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicNumber& x) { return os << x.to_string(); }

namespace {

/// Cursor over the rendering `p^v * (d0 + d1*p + ... + O(p^k))`.
class PadicTextParser {
 public:
  PadicTextParser(std::string_view text, std::optional<Prime> prime) : text_(text), prime_(prime) {}

  PadicNumber parse() {
    skip_space();
    if (text_.substr(pos_) == "0") {
      if (!prime_) error("prime for the zero literal");
      return PadicNumber::zero(*prime_);
    }
    const std::int64_t p = integer("prime");
    if (prime_ && *prime_ != p) {
      fail(ErrorKind::PrimeMismatch, "literal is over " + std::to_string(p) + ", expected " +
                                         std::to_string(*prime_));
    }
    expect('^');
    const std::int64_t v = integer("valuation");
    expect('*');
    expect('(');
    std::map<std::int64_t, std::int64_t> digits;
    std::int64_t k = 0;
    while (true) {
      skip_space();
      if (peek() == 'O') {
        ++pos_;
        expect('(');
        if (integer("prime") != p) error("matching prime");
        expect('^');
        k = integer("precision");
        expect(')');
        break;
      }
      const std::int64_t d = integer("digit");
      std::int64_t position = 0;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        if (integer("prime") != p) error("matching prime");
        position = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          position = integer("exponent");
        }
      }
      if (!digits.emplace(position, d).second) error("distinct digit positions");
      expect('+');
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) error("end of input");
    if (k < 1) error("positive precision");
    std::vector<std::int64_t> dense(static_cast<std::size_t>(k), 0);
    for (auto [position, d] : digits) {
      if (position < 0 || position >= k) error("digit position below precision");
      dense[static_cast<std::size_t>(position)] = d;
    }
    return PadicNumber::from_digits(p, v, std::move(dense));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& expected) const {
    throw ParseError(pos_, {expected}, "malformed p-adic literal");
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string(1, c));
    ++pos_;
  }
  std::int64_t integer(const std::string& what) {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error(what);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
    return negative ? -value : value;
  }

  std::string_view text_;
  std::optional<Prime> prime_;
  std::size_t pos_ = 0;
};

}  // namespace

PadicNumber PadicNumber::parse(std::string_view text, std::optional<Prime> prime) {
  return PadicTextParser(text, prime).parse();
}

}  // namespace valkit
