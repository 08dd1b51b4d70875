#pragma once

// Conversions among the sequences c (Hilbert series), b (its logarithm),
// w (Moebius transform of b) and a (Lie algebra ranks), in scalar,
// equivariant and chi0-filtration flavors.

#include <map>
#include <string>
#include <vector>

#include "gocha/group_ring.hpp"
#include "gocha/series.hpp"

namespace gocha {

// Classical Moebius function; n >= 1.
int mobius(long n);

// Positive divisors of n in increasing order.
std::vector<long> divisors(long n);

enum class Flavor { kScalar, kEquivariant, kChi0 };
std::string flavor_name(Flavor f);

// Degree-indexed table of b (or w) values; degree 0 is never stored.
template <class C>
struct BTable {
  Flavor flavor = Flavor::kScalar;
  std::map<int, C> entries;

  bool has(int n) const { return entries.count(n) != 0; }
  const C& at(int n) const {
    auto it = entries.find(n);
    if (it == entries.end()) {
      throw UsageError("table has no entry at degree " + std::to_string(n));
    }
    return it->second;
  }
  int max_degree() const { return entries.empty() ? 0 : entries.rbegin()->first; }
};

using ScalarBTable = BTable<Rational>;
using EqBTable = BTable<GroupRingElt>;

// b_n = coefficients of log(series) for n >= 1.
template <class C>
BTable<C> b_table_from_series(const TruncatedSeries<C>& series, Flavor flavor) {
  const TruncatedSeries<C> log = ser_log(series);
  BTable<C> b;
  b.flavor = flavor;
  for (int n = 1; n <= log.trunc(); ++n) b.entries.emplace(n, log[n]);
  return b;
}

// w_n = (1/n) sum_{m|n} mu(n/m) * adams(m * b_m, n/m). For the equivariant
// flavor this is only available when gcd(n, q) = 1.
template <class C>
C w_from_b(const BTable<C>& b, int n) {
  if (n < 1) throw UsageError("w is defined for degrees n >= 1");
  const C& sample = b.at(1);
  const int q = coeff_q(sample);
  if (q > 1 && gcd(n, q) != 1) {
    throw UnsupportedDegreeError("equivariant w_n needs gcd(n, q) = 1; got n=" +
                                 std::to_string(n) + ", q=" + std::to_string(q));
  }
  C acc = zero_like(sample);
  for (long m : divisors(n)) {
    const int mu = mobius(n / m);
    if (mu == 0) continue;
    C term = adams(b.at(static_cast<int>(m)) * Rational(m), n / m);
    if (mu > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / Rational(n);
}

// w at every supported degree of b.
template <class C>
BTable<C> w_table(const BTable<C>& b) {
  BTable<C> w;
  w.flavor = b.flavor;
  if (b.entries.empty()) return w;
  const int q = coeff_q(b.entries.begin()->second);
  for (const auto& [n, value] : b.entries) {
    if (q > 1 && gcd(n, q) != 1) continue;
    w.entries.emplace(n, w_from_b(b, n));
  }
  return w;
}

// Zp-mode: a_n = w_n. Fp-mode with n = m p^k, (m, p) = 1: a_n = w_m + w_{mp} + ... + w_{mp^k}.
// Degrees whose inputs are missing are left out. Throws IntegralityError on
// fractional results.
RankTable a_from_w(const ScalarBTable& w, const RingMode& mode);
RankTable a_from_w(const EqBTable& w, const RingMode& mode);

// n b_n = sum_{m|n} m adams(a_m, n/m) - [Fp] sum_{rp|n} rp adams(a_r, n/(rp)).
EqBTable b_from_a(const RankTable& a, int trunc);
ScalarBTable b_from_a_scalar(const RankTable& a, int trunc);

struct Chi0Pipeline {
  ScalarBTable b;
  ScalarBTable w;
  RankTable a;
};

// b, w, a for the chi0-filtration series c = gocha_chi0 (c_0 = 1).
Chi0Pipeline chi0_pipeline(const Series& c, const RingMode& mode);

struct EigencheckReport {
  struct CharacterCheck {
    int char_index;  // psi(chi) in [1, q-1]
    long prime;      // prime congruent to char_index mod q
    bool holds;      // b_{chi0,prime} > b_{chi0,1}
  };
  struct TrivialCheck {
    long prime;  // l with q*l within the table
    bool holds;  // b_{chi0,q l} >= q b_{chi0,q} + l b_{chi0,l}
  };
  std::vector<CharacterCheck> character_checks;
  std::vector<TrivialCheck> trivial_checks;
};

// Finite evidence for the two sufficient conditions on b_{chi0,n}; reports
// every checkable degree inside the table.
EigencheckReport eigencheck_conditions(const ScalarBTable& b, int q);

}  // namespace gocha
