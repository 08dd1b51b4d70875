#include "gocha/inversion.hpp"

#include <algorithm>
#include <optional>

namespace gocha {

int mobius(long n) {
  if (n < 1) throw UsageError("mobius is defined for n >= 1");
  int result = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::kScalar:
      return "scalar";
    case Flavor::kEquivariant:
      return "equivariant";
    case Flavor::kChi0:
      return "chi0";
  }
  return "unknown";
}

namespace {

std::int64_t require_integer(const Rational& value, int n, int index) {
  if (!is_integer(value)) {
    throw IntegralityError("rank at degree " + std::to_string(n) +
                           (index >= 0 ? ", character " + std::to_string(index) : std::string()) +
                           " is not an integer: " + value.get_str());
  }
  const Integer& num = value.get_num();
  if (!num.fits_slong_p()) {
    throw IntegralityError("rank at degree " + std::to_string(n) + " overflows 64 bits");
  }
  return num.get_si();
}

// Degrees m, mp, ..., mp^k making up n in Fp-mode; just {n} in Zp-mode.
std::vector<int> accumulation_degrees(int n, const RingMode& mode) {
  if (!mode.is_fp()) return {n};
  if (mode.p < 2) throw UsageError("Fp-mode needs the prime p");
  int m = n;
  while (m % mode.p == 0) m /= mode.p;
  std::vector<int> out;
  for (long d = m; d <= n; d *= mode.p) out.push_back(static_cast<int>(d));
  return out;
}

template <class C>
std::optional<C> accumulate_w(const BTable<C>& w, int n, const RingMode& mode) {
  std::optional<C> acc;
  for (int d : accumulation_degrees(n, mode)) {
    if (!w.has(d)) return std::nullopt;
    if (acc) {
      *acc += w.at(d);
    } else {
      acc = w.at(d);
    }
  }
  return acc;
}

}  // namespace

RankTable a_from_w(const ScalarBTable& w, const RingMode& mode) {
  RankTable a;
  a.mode = mode;
  a.q = 1;
  for (const auto& [n, value] : w.entries) {
    const auto acc = accumulate_w(w, n, mode);
    if (!acc) continue;
    a.set(n, 0, require_integer(*acc, n, -1));
  }
  return a;
}

RankTable a_from_w(const EqBTable& w, const RingMode& mode) {
  RankTable a;
  a.mode = mode;
  a.q = w.entries.empty() ? 1 : w.entries.begin()->second.q();
  for (const auto& [n, value] : w.entries) {
    const auto acc = accumulate_w(w, n, mode);
    if (!acc) continue;
    for (int i = 0; i < a.q; ++i) a.set(n, i, require_integer((*acc)[i], n, i));
  }
  return a;
}

EqBTable b_from_a(const RankTable& a, int trunc) {
  EqBTable b;
  b.flavor = a.q > 1 ? Flavor::kEquivariant : Flavor::kScalar;
  for (int n = 1; n <= trunc; ++n) {
    GroupRingElt acc(a.q);
    for (long m : divisors(n)) {
      acc += gr_adams(a.at(static_cast<int>(m)), n / m) * Rational(m);
    }
    if (a.mode.is_fp()) {
      if (a.mode.p < 2) throw UsageError("Fp-mode needs the prime p");
      if (n % a.mode.p == 0) {
        for (long r : divisors(n / a.mode.p)) {
          const long rp = r * a.mode.p;
          acc -= gr_adams(a.at(static_cast<int>(r)), n / rp) * Rational(rp);
        }
      }
    }
    b.entries.emplace(n, acc / Rational(n));
  }
  return b;
}

ScalarBTable b_from_a_scalar(const RankTable& a, int trunc) {
  ScalarBTable b;
  b.flavor = Flavor::kScalar;
  for (int n = 1; n <= trunc; ++n) {
    Rational acc = 0;
    for (long m : divisors(n)) acc += Rational(m) * Rational(static_cast<long>(a.total(m)));
    if (a.mode.is_fp() && n % a.mode.p == 0) {
      for (long r : divisors(n / a.mode.p)) {
        acc -= Rational(r * a.mode.p) * Rational(static_cast<long>(a.total(r)));
      }
    }
    b.entries.emplace(n, acc / n);
  }
  return b;
}

Chi0Pipeline chi0_pipeline(const Series& c, const RingMode& mode) {
  if (c[0] != 1) throw ArithmeticError("chi0 series must start with 1");
  Chi0Pipeline out;
  out.b = b_table_from_series(c, Flavor::kChi0);
  out.w = w_table(out.b);
  out.a = a_from_w(out.w, mode);
  return out;
}

EigencheckReport eigencheck_conditions(const ScalarBTable& b, int q) {
  EigencheckReport report;
  if (b.entries.empty() || !b.has(1)) return report;
  const int top = b.max_degree();
  const Rational& b1 = b.at(1);
  for (long prime = 2; prime <= top; ++prime) {
    if (!is_prime(prime) || !b.has(static_cast<int>(prime))) continue;
    const int residue = static_cast<int>(prime % q);
    if (residue == 0) continue;
    report.character_checks.push_back({residue, prime, b.at(static_cast<int>(prime)) > b1});
  }
  if (b.has(q)) {
    const Rational& bq = b.at(q);
    for (long prime = 2; static_cast<long>(q) * prime <= top; ++prime) {
      if (!is_prime(prime) || !b.has(static_cast<int>(prime))) continue;
      const Rational lhs = b.at(static_cast<int>(q * prime));
      const Rational rhs = Rational(q) * bq + Rational(prime) * b.at(static_cast<int>(prime));
      report.trivial_checks.push_back({prime, lhs >= rhs});
    }
  }
  return report;
}

}  // namespace gocha
