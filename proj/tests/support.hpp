#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gocha/group_ring.hpp"
#include "gocha/presentation.hpp"
#include "gocha/series.hpp"

namespace gocha::test {

inline std::string fixture_text(const std::string& relative) {
  const std::string path = std::string(GOCHA_FIXTURES_DIR) + "/" + relative;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline PresentationSpec fixture(const std::string& name) {
  return parse_presentation(fixture_text("presentations/" + name + ".json"));
}

// Dense group ring element from integer coefficients.
inline GroupRingElt gre(int q, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  c.resize(q, 0);
  return GroupRingElt(q, c);
}

// Sum of chi0^index over the listed indices (repeats count).
inline GroupRingElt chars(int q, std::initializer_list<int> indices) {
  GroupRingElt out(q);
  for (int i : indices) out += GroupRingElt::basis(q, i);
  return out;
}

inline Series poly(std::initializer_list<long> coeffs, int trunc) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Series(trunc, c);
}

inline std::vector<long> as_longs(const Series& s) {
  std::vector<long> out;
  for (int n = 0; n <= s.trunc(); ++n) out.push_back(s[n].get_num().get_si());
  return out;
}

// Linear recurrence expansion of 1 / (1 + c_1 t + ... + c_k t^k); an
// independent route to the inverse of an Euler polynomial.
inline std::vector<long> recurrence_inverse(const std::vector<long>& denominator, int trunc) {
  std::vector<long> out(trunc + 1, 0);
  out[0] = 1;
  for (int n = 1; n <= trunc; ++n) {
    long acc = 0;
    for (int k = 1; k < static_cast<int>(denominator.size()) && k <= n; ++k) {
      acc -= denominator[k] * out[n - k];
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace gocha::test
