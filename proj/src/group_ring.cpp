#include "gocha/group_ring.hpp"

#include <utility>

#include "gocha/errors.hpp"

namespace gocha {

namespace {

void require_same_q(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.q() != b.q()) {
    throw UsageError("group ring elements over different cyclic groups (q=" +
                     std::to_string(a.q()) + " vs q=" + std::to_string(b.q()) + ")");
  }
}

}  // namespace

int char_weight(int index, int q, int chi0_exponent) {
  if (q < 1) throw UsageError("q must be positive");
  if (gcd(chi0_exponent, q) != 1) {
    throw UsageError("chi0 exponent " + std::to_string(chi0_exponent) +
                     " does not generate Z/" + std::to_string(q));
  }
  const std::int64_t k =
      floor_mod(static_cast<std::int64_t>(index) * mod_inverse(chi0_exponent, q), q);
  return k == 0 ? q : static_cast<int>(k);
}

GroupRingElt::GroupRingElt(int q) {
  if (q < 1) throw UsageError("q must be positive");
  coeffs_.assign(q, Rational(0));
}

GroupRingElt::GroupRingElt(int q, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (q < 1 || static_cast<int>(coeffs_.size()) != q) {
    throw UsageError("group ring element needs exactly q coefficients");
  }
}

GroupRingElt GroupRingElt::one(int q) { return basis(q, 0); }

GroupRingElt GroupRingElt::basis(int q, int index, const Rational& scale) {
  GroupRingElt e(q);
  e.coeffs_[floor_mod(index, q)] = scale;
  return e;
}

bool GroupRingElt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& other) {
  require_same_q(*this, other);
  for (int i = 0; i < q(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& other) {
  require_same_q(*this, other);
  for (int i = 0; i < q(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const GroupRingElt& other) {
  require_same_q(*this, other);
  const int n = q();
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      out[(i + j) % n] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

GroupRingElt& GroupRingElt::operator/=(const Rational& scale) {
  if (sgn(scale) == 0) throw ArithmeticError("division of a group ring element by zero");
  for (auto& c : coeffs_) c /= scale;
  return *this;
}

GroupRingElt GroupRingElt::operator-() const {
  GroupRingElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string GroupRingElt::to_string() const {
  std::string out;
  for (int i = 0; i < q(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else if (c == 1) {
      term = "chi0^" + std::to_string(i);
    } else if (c == -1) {
      term = "-chi0^" + std::to_string(i);
    } else {
      term = c.get_str() + "*chi0^" + std::to_string(i);
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b) { return a + b; }

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) { return a * b; }

GroupRingElt gr_adams(const GroupRingElt& a, long u) {
  const int q = a.q();
  GroupRingElt out(q);
  for (int i = 0; i < q; ++i) {
    if (sgn(a[i]) == 0) continue;
    out[static_cast<int>(floor_mod(static_cast<std::int64_t>(u) * i, q))] += a[i];
  }
  return out;
}

Rational gr_augment(const GroupRingElt& a) {
  Rational s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

GroupRingElt gr_inverse(const GroupRingElt& a) {
  // Solve a * x = 1 as a circulant linear system over Q.
  const int q = a.q();
  std::vector<std::vector<Rational>> m(q, std::vector<Rational>(q + 1, Rational(0)));
  for (int row = 0; row < q; ++row) {
    for (int col = 0; col < q; ++col) m[row][col] = a[static_cast<int>(floor_mod(row - col, q))];
    m[row][q] = row == 0 ? 1 : 0;
  }
  for (int col = 0; col < q; ++col) {
    int pivot = -1;
    for (int row = col; row < q; ++row) {
      if (sgn(m[row][col]) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      throw ArithmeticError("group ring element " + a.to_string() + " is not invertible");
    }
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (int k = col; k <= q; ++k) m[col][k] *= inv;
    for (int row = 0; row < q; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational f = m[row][col];
      for (int k = col; k <= q; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(q);
  for (int i = 0; i < q; ++i) x[i] = m[i][q];
  return GroupRingElt(q, std::move(x));
}

}  // namespace gocha
