#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace valkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Primes are machine words; the values they act on are arbitrary size.
using Prime = std::int64_t;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt prime_power(Prime p, std::int64_t exponent);

/// Least non-negative residue, for any sign of `a`.
BigInt floor_mod(const BigInt& a, const BigInt& m);

/// Exponent of p in a nonzero integer.
std::int64_t p_adic_order(const BigInt& n, Prime p);

/// Strips every factor p from n (n != 0), returning the order removed.
std::int64_t strip_prime(BigInt& n, Prime p);

/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

bool is_prime(std::int64_t n);
void require_prime(std::int64_t p);

std::int64_t to_int64(const BigInt& n);
std::string to_string(const BigInt& n);
std::string to_string(const Rational& r);

/// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

}  // namespace valkit
