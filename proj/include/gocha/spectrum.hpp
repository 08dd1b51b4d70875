#pragma once

// Eigenvalue side of the Euler polynomials: exact power sums and necklace
// ranks (no root extraction), plus certified root isolation for the
// entropy verdict.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gocha/group_ring.hpp"
#include "gocha/inversion.hpp"
#include "gocha/presentation.hpp"
#include "gocha/series.hpp"

namespace gocha {

// s_1..s_N of the inverse roots of a polynomial with constant term 1;
// s[0] is unused and left at zero.
template <class C>
struct PowerSums {
  std::vector<C> s;
  int size() const { return static_cast<int>(s.size()) - 1; }
  const C& operator[](int m) const { return s.at(m); }
};

// Newton's identities for prod(1 - eta_j t) = sum c_k t^k:
// s_m = -m c_m - sum_{k=1}^{m-1} c_k s_{m-k}.
template <class C>
PowerSums<C> newton_power_sums(const TruncatedSeries<C>& poly, int N) {
  if (poly[0] != poly.one()) throw UsageError("power sums need constant term 1");
  const int top = poly.trunc();
  auto coeff = [&](int k) { return k <= top ? poly[k] : poly.zero(); };
  PowerSums<C> out;
  out.s.assign(N + 1, poly.zero());
  for (int m = 1; m <= N; ++m) {
    C acc = coeff(m) * Rational(-m);
    for (int k = 1; k < m && k <= top; ++k) {
      if (coeff_is_zero(poly[k])) continue;
      acc -= poly[k] * out.s[m - k];
    }
    out.s[m] = acc;
  }
  return out;
}

// a_n from power sums: (1/n) sum_{m|n} mu(n/m) s_m, summed over n/p^j
// degrees in Fp-mode. Throws IntegralityError on fractional or negative output.
Rational necklace_ranks(const Series& poly, int n, const RingMode& mode);
// Equivariant version with the Adams twist; needs gcd(n, q) = 1.
GroupRingElt equivariant_necklace_ranks(const EqSeries& poly, int n, const RingMode& mode);

struct RootEstimate {
  std::complex<double> value;
  double radius = 0;  // certified inclusion radius when the disks are disjoint
};

enum class Dominance { kUniqueRealDominant, kTied, kComplexDominant, kInconclusive };
enum class Verdict { kAllEigenspacesInfinite, kAnalyticLike, kInconclusive, kTrivial };

std::string dominance_name(Dominance d);
std::string verdict_name(Verdict v);

// Eigenvalues (inverse roots) of a polynomial with constant term 1, i.e. the
// roots of its monic reversal. Empty for constant input.
std::vector<RootEstimate> isolate_roots(const Series& poly, bool* disjoint = nullptr);

// Exact rational bracket (lo, hi] around the largest positive real eigenvalue.
struct RealRootBracket {
  Rational lo;
  Rational hi;
  bool simple = true;
  bool above_one = false;  // decided exactly
};
std::optional<RealRootBracket> largest_positive_eigenvalue(const Series& poly, int bits = 64);
// Number of distinct positive real eigenvalues (Sturm count).
int count_positive_eigenvalues(const Series& poly);

struct EvidencePoint {
  int degree;
  double ratio;  // b_n * n / lambda^n
};

struct SpectrumReport {
  Series polynomial;
  std::vector<RootEstimate> eigenvalues;
  bool disks_disjoint = false;
  std::optional<RealRootBracket> dominant_real;
  double entropy_lo = 0;  // interval for L = max |eigenvalue|
  double entropy_hi = 0;
  Dominance dominance = Dominance::kInconclusive;
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
  std::vector<EvidencePoint> evidence;
  bool evidence_stable = false;  // all ratios agree to 3 significant figures
  std::optional<int> evidence_settled_from;  // first degree after which they do
};

// Verdict for a chi0-filtration Euler polynomial. `b` supplies b_{chi0,n}
// evidence; when absent it is computed from the polynomial.
SpectrumReport entropy_verdict(const Series& chi0_poly, double tolerance = 1e-9,
                               const ScalarBTable* b = nullptr);

// Free presentations: rank >= 2 is infinite, rank 1 analytic-like, rank 0 trivial.
SpectrumReport free_group_verdict(const PresentationSpec& spec);

}  // namespace gocha
