#pragma once

// Truncated power series with exact coefficients, generic over the
// coefficient ring: Rational (scalar series) or GroupRingElt (equivariant).

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gocha/errors.hpp"
#include "gocha/group_ring.hpp"
#include "gocha/rational.hpp"

namespace gocha {

template <class C>
class TruncatedSeries {
 public:
  using Coeff = C;

  TruncatedSeries() = default;

  // Zero series to degree `trunc`; `zero` fixes the coefficient ring (q).
  TruncatedSeries(int trunc, const C& zero) {
    if (trunc < 0) throw UsageError("truncation degree must be nonnegative");
    coeffs_.assign(trunc + 1, zero_like(zero));
  }

  // Coefficients c_0, c_1, ...; missing degrees are zero, extra ones dropped.
  TruncatedSeries(int trunc, std::vector<C> coeffs) {
    if (trunc < 0) throw UsageError("truncation degree must be nonnegative");
    if (coeffs.empty()) throw UsageError("series needs at least a constant coefficient");
    const C zero = zero_like(coeffs.front());
    coeffs.resize(trunc + 1, zero);
    coeffs_ = std::move(coeffs);
  }

  static TruncatedSeries constant(int trunc, const C& value) {
    TruncatedSeries s(trunc, value);
    s.coeffs_[0] = value;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](int n) const { return coeffs_.at(n); }
  C& operator[](int n) { return coeffs_.at(n); }
  C zero() const { return zero_like(coeffs_.front()); }
  C one() const { return one_like(coeffs_.front()); }

  // Highest degree with a nonzero coefficient, -1 for the zero series.
  int degree() const {
    for (int n = trunc(); n >= 0; --n) {
      if (!coeff_is_zero(coeffs_[n])) return n;
    }
    return -1;
  }

  TruncatedSeries truncated(int new_trunc) const {
    std::vector<C> c = coeffs_;
    return TruncatedSeries(new_trunc, std::move(c));
  }

  // s(t^k).
  TruncatedSeries substitute_power(int k) const {
    TruncatedSeries out(trunc(), coeffs_.front());
    for (int n = 0; n * k <= trunc(); ++n) out.coeffs_[n * k] = coeffs_[n];
    return out;
  }

  template <class F>
  auto map(F f) const {
    using D = decltype(f(coeffs_.front()));
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<D>(trunc(), std::move(out));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.trunc());
    for (int n = 0; n <= trunc(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.trunc());
    for (int n = 0; n <= trunc(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.trunc(), b.trunc());
    TruncatedSeries out(n, a.coeffs_.front());
    for (int i = 0; i <= n; ++i) {
      if (coeff_is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (coeff_is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  void shrink_to(int t) {
    if (t < trunc()) coeffs_.resize(t + 1);
  }

  std::vector<C> coeffs_;
};

using Series = TruncatedSeries<Rational>;
using EqSeries = TruncatedSeries<GroupRingElt>;

template <class C>
TruncatedSeries<C> ser_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return a * b;
}

template <class C>
TruncatedSeries<C> ser_inv(const TruncatedSeries<C>& s) {
  const C& c0 = s[0];
  if (sgn(augment(c0)) == 0) {
    throw ArithmeticError("series constant term has zero augmentation; not invertible");
  }
  const C inv0 = coeff_inverse(c0);
  TruncatedSeries<C> out(s.trunc(), c0);
  out[0] = inv0;
  for (int n = 1; n <= s.trunc(); ++n) {
    C acc = s.zero();
    for (int k = 1; k <= n; ++k) {
      if (coeff_is_zero(s[k])) continue;
      acc += s[k] * out[n - k];
    }
    out[n] = -(acc * inv0);
  }
  return out;
}

template <class C>
TruncatedSeries<C> ser_pow(const TruncatedSeries<C>& s, long k) {
  TruncatedSeries<C> base = k < 0 ? ser_inv(s) : s;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  TruncatedSeries<C> result = TruncatedSeries<C>::constant(s.trunc(), s.one());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// log(P) for P with constant term 1, from t*P' = P * t*log(P)'.
template <class C>
TruncatedSeries<C> ser_log(const TruncatedSeries<C>& p) {
  if (p[0] != p.one()) throw ArithmeticError("log needs a series with constant term 1");
  TruncatedSeries<C> out(p.trunc(), p[0]);
  for (int n = 1; n <= p.trunc(); ++n) {
    C acc = p[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (coeff_is_zero(out[k]) || coeff_is_zero(p[n - k])) continue;
      acc -= out[k] * p[n - k] * Rational(k);
    }
    out[n] = acc / Rational(n);
  }
  return out;
}

template <class C>
TruncatedSeries<C> ser_exp(const TruncatedSeries<C>& l) {
  if (!coeff_is_zero(l[0])) throw ArithmeticError("exp needs a series with zero constant term");
  TruncatedSeries<C> out(l.trunc(), l[0]);
  out[0] = l.one();
  for (int n = 1; n <= l.trunc(); ++n) {
    C acc = l.zero();
    for (int k = 1; k <= n; ++k) {
      if (coeff_is_zero(l[k])) continue;
      acc += l[k] * out[n - k] * Rational(k);
    }
    out[n] = acc / Rational(n);
  }
  return out;
}

// Coefficientwise augmentation of an equivariant series.
inline Series augment_series(const EqSeries& s) {
  return s.map([](const GroupRingElt& c) { return gr_augment(c); });
}

// Ranks a_n^chi indexed by (degree n >= 1, character index). A table with
// q = 1 holds scalar ranks (a_n, or a_{chi0,n}).
struct RankTable {
  RingMode mode;
  int q = 1;
  std::map<std::pair<int, int>, std::int64_t> entries;

  void set(int n, int index, std::int64_t value) { entries[{n, index}] = value; }
  std::int64_t get(int n, int index) const {
    auto it = entries.find({n, index});
    return it == entries.end() ? 0 : it->second;
  }
  bool has_degree(int n) const;
  int max_degree() const;
  GroupRingElt at(int n) const;
  // Sum over characters at degree n.
  std::int64_t total(int n) const;
};

// Product over n and chi of P_chi(A, t^n)^{a_n^chi}.
EqSeries product_formula(const RankTable& a, int trunc);
// Same product with the scalar factor P(A, t), grading by a_n summed over characters.
Series product_formula_scalar(const RankTable& a, int trunc);

}  // namespace gocha
