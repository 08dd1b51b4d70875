#pragma once

// Exact arithmetic in Q[Z/qZ]. Characters of the cyclic group are indexed by
// the exponent of a fixed generator chi0, so index i stands for chi0^i.

#include <string>
#include <vector>

#include "gocha/rational.hpp"

namespace gocha {

// Weight of the character chi0^index in the filtration attached to the
// generator chi0^chi0_exponent: the residue index / chi0_exponent mod q,
// read in [1, q] (the trivial character weighs q).
int char_weight(int index, int q, int chi0_exponent = 1);

struct RingMode {
  enum class Kind { kFp, kZp };
  Kind kind = Kind::kZp;
  // Carried in both modes; only Fp-mode formulas use it.
  int p = 0;

  static RingMode fp(int p) { return {Kind::kFp, p}; }
  static RingMode zp(int p = 0) { return {Kind::kZp, p}; }
  bool is_fp() const { return kind == Kind::kFp; }
  std::string name() const { return is_fp() ? "fp" : "zp"; }
};

class GroupRingElt {
 public:
  GroupRingElt() = default;
  // Zero element of Q[Z/qZ].
  explicit GroupRingElt(int q);
  GroupRingElt(int q, std::vector<Rational> coeffs);

  static GroupRingElt zero(int q) { return GroupRingElt(q); }
  static GroupRingElt one(int q);
  // chi0^index with coefficient `scale`.
  static GroupRingElt basis(int q, int index, const Rational& scale = 1);

  int q() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int index) const { return coeffs_[index]; }
  Rational& operator[](int index) { return coeffs_[index]; }

  bool is_zero() const;

  GroupRingElt& operator+=(const GroupRingElt& other);
  GroupRingElt& operator-=(const GroupRingElt& other);
  GroupRingElt& operator*=(const GroupRingElt& other);
  GroupRingElt& operator*=(const Rational& scale);
  GroupRingElt& operator/=(const Rational& scale);

  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(GroupRingElt a, const GroupRingElt& b) { return a *= b; }
  friend GroupRingElt operator*(GroupRingElt a, const Rational& s) { return a *= s; }
  friend GroupRingElt operator*(const Rational& s, GroupRingElt a) { return a *= s; }
  friend GroupRingElt operator/(GroupRingElt a, const Rational& s) { return a /= s; }
  GroupRingElt operator-() const;

  friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const GroupRingElt& a, const GroupRingElt& b) { return !(a == b); }

  // Human readable form, e.g. "6+2*chi0^1".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);
// Re-indexing i -> u*i mod q (the twist chi -> chi^u); collisions add up.
GroupRingElt gr_adams(const GroupRingElt& a, long u);
// Sum of all coefficients.
Rational gr_augment(const GroupRingElt& a);
// Multiplicative inverse; throws ArithmeticError when a is a zero divisor.
GroupRingElt gr_inverse(const GroupRingElt& a);

// Coefficient-type hooks so series code can be written once for both
// Rational and GroupRingElt coefficients.
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline GroupRingElt zero_like(const GroupRingElt& x) { return GroupRingElt::zero(x.q()); }
inline GroupRingElt one_like(const GroupRingElt& x) { return GroupRingElt::one(x.q()); }
inline bool coeff_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const GroupRingElt& x) { return x.is_zero(); }
inline Rational adams(const Rational& x, long) { return x; }
inline GroupRingElt adams(const GroupRingElt& x, long u) { return gr_adams(x, u); }
inline Rational augment(const Rational& x) { return x; }
inline Rational augment(const GroupRingElt& x) { return gr_augment(x); }
inline Rational coeff_inverse(const Rational& x) { return 1 / x; }
inline GroupRingElt coeff_inverse(const GroupRingElt& x) { return gr_inverse(x); }
inline int coeff_q(const Rational&) { return 1; }
inline int coeff_q(const GroupRingElt& x) { return x.q(); }

}  // namespace gocha
