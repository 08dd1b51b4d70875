#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gocha {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den", or "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

// Number theory helpers shared by several modules.
bool is_prime(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
// Inverse of a modulo m; a and m must be coprime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gocha
