#include "gocha/series.hpp"

namespace gocha {

bool RankTable::has_degree(int n) const {
  auto it = entries.lower_bound({n, 0});
  return it != entries.end() && it->first.first == n;
}

int RankTable::max_degree() const { return entries.empty() ? 0 : entries.rbegin()->first.first; }

GroupRingElt RankTable::at(int n) const {
  GroupRingElt out(q);
  for (int i = 0; i < q; ++i) out[i] = Rational(static_cast<long>(get(n, i)));
  return out;
}

std::int64_t RankTable::total(int n) const {
  std::int64_t s = 0;
  for (int i = 0; i < q; ++i) s += get(n, i);
  return s;
}

namespace {

// (1 - coeff * t^step)^{-1} truncated: sum_k coeff^k t^{k*step}.
template <class C>
TruncatedSeries<C> geometric(const C& coeff, int step, int trunc) {
  TruncatedSeries<C> s(trunc, coeff);
  C power = one_like(coeff);
  for (int k = 0; k * step <= trunc; ++k) {
    s[k * step] = power;
    power = power * coeff;
  }
  return s;
}

template <class C>
TruncatedSeries<C> binomial_factor(const C& coeff, int step, int trunc) {
  TruncatedSeries<C> s = TruncatedSeries<C>::constant(trunc, one_like(coeff));
  if (step <= trunc) s[step] = -coeff;
  return s;
}

template <class C>
TruncatedSeries<C> factor_power(const RingMode& mode, const C& chi, int n, std::int64_t exponent,
                                int trunc) {
  if (exponent < 0) throw DomainError("rank tables must be nonnegative");
  TruncatedSeries<C> denominator = ser_pow(geometric(chi, n, trunc), static_cast<long>(exponent));
  if (!mode.is_fp()) return denominator;
  if (mode.p < 2) throw UsageError("Fp-mode needs the prime p");
  const long step = static_cast<long>(n) * mode.p;
  if (step > trunc) return denominator;
  return denominator *
         ser_pow(binomial_factor(chi, static_cast<int>(step), trunc), static_cast<long>(exponent));
}

}  // namespace

EqSeries product_formula(const RankTable& a, int trunc) {
  EqSeries result = EqSeries::constant(trunc, GroupRingElt::one(a.q));
  for (const auto& [key, value] : a.entries) {
    const auto [n, index] = key;
    if (value < 0) throw DomainError("rank tables must be nonnegative");
    if (value == 0 || n > trunc) continue;
    result = result * factor_power(a.mode, GroupRingElt::basis(a.q, index), n, value, trunc);
  }
  return result;
}

Series product_formula_scalar(const RankTable& a, int trunc) {
  Series result = Series::constant(trunc, Rational(1));
  for (const auto& [key, value] : a.entries) {
    if (value < 0) throw DomainError("rank tables must be nonnegative");
  }
  for (int n = 1; n <= std::min(trunc, a.max_degree()); ++n) {
    const std::int64_t total = a.total(n);
    if (total == 0) continue;
    result = result * factor_power(a.mode, Rational(1), n, total, trunc);
  }
  return result;
}

}  // namespace gocha
