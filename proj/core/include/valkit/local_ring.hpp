#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "valkit/bigint.hpp"

namespace valkit {

enum class RingKind {
  IntegersMod,          // Z/p^n Z, t = p
  TruncatedPolynomials  // F_p[t]/(t^n), t = X
};

std::string to_string(RingKind kind);

/// A finite local ring with principal maximal ideal (t) and t^n = 0. Elements
/// are codes in [0, p^n) whose base-p digits a_0 ... a_{n-1} give the element
/// a_0 + a_1 t + ... + a_{n-1} t^{n-1} in both kinds.
class FiniteLocalRing {
 public:
  using Code = std::uint32_t;

  static FiniteLocalRing integers_mod(Prime p, int n);
  static FiniteLocalRing truncated(Prime p, int n);
  static FiniteLocalRing make(RingKind kind, Prime p, int n);

  RingKind kind() const { return kind_; }
  Prime prime() const { return p_; }
  int nilpotency() const { return n_; }
  Code size() const { return size_; }
  std::string name() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// p in Z/p^n, X in F_p[t]/(t^n); 0 when n = 1.
  Code uniformizer() const { return n_ > 1 ? static_cast<Code>(p_) : 0; }
  Code from_integer(std::int64_t k) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;

  std::vector<std::int64_t> digits(Code a) const;
  Code from_digits(const std::vector<std::int64_t>& digits) const;
  bool is_unit(Code a) const { return a % p_ != 0; }
  std::string format(Code a) const;

  /// Additive order of 1.
  std::uint64_t characteristic() const;

  bool same_as(const FiniteLocalRing& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_;
  }

 private:
  FiniteLocalRing(RingKind kind, Prime p, int n);
  Code slow_add(Code a, Code b) const;
  Code slow_mul(Code a, Code b) const;

  RingKind kind_;
  Prime p_;
  int n_;
  Code size_;
  /// Cayley tables for rings small enough to tabulate.
  std::shared_ptr<const std::vector<Code>> add_table_;
  std::shared_ptr<const std::vector<Code>> mul_table_;
};

/// An element together with its ring; mixing rings throws RingMismatch.
class RingElement {
 public:
  RingElement(FiniteLocalRing ring, FiniteLocalRing::Code code);

  const FiniteLocalRing& ring() const { return ring_; }
  FiniteLocalRing::Code code() const { return code_; }
  std::vector<std::int64_t> digits() const { return ring_.digits(code_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const { return {ring_, ring_.neg(code_)}; }

  bool operator==(const RingElement& other) const { return ring_.same_as(other.ring_) && code_ == other.code_; }

  std::string to_string() const { return ring_.format(code_); }

 private:
  FiniteLocalRing ring_;
  FiniteLocalRing::Code code_;
};

/// Digits a_0 ... a_{n-1} in [0, p) with r = Σ a_i t^i.
std::vector<std::int64_t> digit_decompose(const RingElement& r);

struct ResidueCharProbe {
  std::uint64_t characteristic = 0;
  std::uint64_t residue_field_order = 0;
  /// A copy of F_p inside R exists exactly when p * 1 = 0.
  bool lift_exists = false;
};

ResidueCharProbe residue_char_probe(const FiniteLocalRing& ring);

}  // namespace valkit
