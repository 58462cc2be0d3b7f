#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "valkit/bigint.hpp"

namespace valkit {

/// Coefficient ring of a univariate polynomial: Z, or Z/mZ (F_p when m is prime).
class Ring {
 public:
  static Ring integers() { return Ring(std::nullopt); }
  static Ring modulo(const BigInt& modulus);

  bool is_integers() const { return !modulus_.has_value(); }
  const std::optional<BigInt>& modulus() const { return modulus_; }
  BigInt reduce(const BigInt& x) const;
  bool contains(const BigInt& x) const;
  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  explicit Ring(std::optional<BigInt> modulus) : modulus_(std::move(modulus)) {}
  std::optional<BigInt> modulus_;
};

/// Dense univariate polynomial, constant term first, with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coefficients, Ring ring = Ring::integers());

  static UniPoly constant(const BigInt& c, Ring ring = Ring::integers());
  static UniPoly monomial(const BigInt& c, std::size_t degree, Ring ring = Ring::integers());

  const Ring& ring() const { return ring_; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  BigInt coefficient(std::size_t i) const;

  BigInt evaluate(const BigInt& x) const;
  /// (P(x), P'(x)) in one Horner pass.
  std::pair<BigInt, BigInt> evaluate_with_derivative(const BigInt& x) const;
  UniPoly derivative() const;
  /// P(X + c).
  UniPoly shift(const BigInt& c) const;

  std::string to_string(const std::string& variable = "x") const;

  bool operator==(const UniPoly&) const = default;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
  Ring ring_ = Ring::integers();
};

/// P_0 ... P_n with P(X + Y) = Σ P_i(X) Y^i. Built from X^k -> C(k, i) X^{k-i}
/// with Pascal's rule, so no division occurs and any characteristic works.
std::vector<UniPoly> taylor_coefficients(const UniPoly& p);

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Z in a fixed number of variables.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t variables = 0) : variables_(variables) {}
  MultiPoly(std::size_t variables, const std::vector<std::pair<Exponents, BigInt>>& terms);

  static MultiPoly constant(std::size_t variables, const BigInt& c);
  static MultiPoly variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<std::uint32_t> total_degree() const;
  bool is_homogeneous() const;
  BigInt constant_term() const;
  bool has_constant_term() const { return constant_term() != 0; }

  /// Exact value; reduced into [0, modulus) when a modulus is given.
  BigInt evaluate(std::span<const BigInt> point, const std::optional<BigInt>& modulus = std::nullopt) const;
  MultiPoly partial_derivative(std::size_t index) const;
  /// Substitutes integer values for every variable except `keep`.
  UniPoly restrict_to(std::size_t keep, std::span<const BigInt> point) const;
  /// Substitutes 0 for the variable and drops it from the variable list.
  MultiPoly drop_variable(std::size_t index) const;
  MultiPoly pow(std::uint32_t exponent) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  bool operator==(const MultiPoly&) const = default;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const BigInt& c, const MultiPoly& a);
  MultiPoly operator-() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::size_t variables_ = 0;
  std::map<Exponents, BigInt> terms_;
};

/// A nonzero homogeneous polynomial of degree d >= 1; homogeneity is checked
/// at construction.
class Form {
 public:
  explicit Form(MultiPoly poly);

  const MultiPoly& poly() const { return poly_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t variables() const { return poly_.variables(); }

  BigInt evaluate(std::span<const BigInt> point, const std::optional<BigInt>& modulus = std::nullopt) const {
    return poly_.evaluate(point, modulus);
  }

  bool operator==(const Form&) const = default;

 private:
  MultiPoly poly_;
  std::uint32_t degree_ = 0;
};

BigInt form_evaluate(const Form& f, std::span<const BigInt> point,
                     const std::optional<BigInt>& modulus = std::nullopt);

/// f(X_1, ..., X_{n-1}, 0) as a form in n-1 variables. Throws BecameZero when
/// X_n divides f.
Form restrict_last_variable(const Form& f);

}  // namespace valkit
