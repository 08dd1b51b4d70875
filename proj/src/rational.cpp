#include "gocha/rational.hpp"

#include "gocha/errors.hpp"

namespace gocha {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw ParseError("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  __int128 result = 1;
  __int128 b = floor_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("no modular inverse");
  return floor_mod(old_s, m);
}

}  // namespace gocha
