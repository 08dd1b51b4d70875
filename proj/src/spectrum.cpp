#include "gocha/spectrum.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>

namespace gocha {

// ------------------------------------------------------- necklace ranks

namespace {

std::vector<int> fp_degrees(int n, const RingMode& mode) {
  if (!mode.is_fp()) return {n};
  if (mode.p < 2) throw UsageError("Fp-mode needs the prime p");
  int m = n;
  while (m % mode.p == 0) m /= mode.p;
  std::vector<int> out;
  for (long d = m; d <= n; d *= mode.p) out.push_back(static_cast<int>(d));
  return out;
}

template <class C>
C necklace_value(const PowerSums<C>& s, int n) {
  C acc = zero_like(s[1]);
  for (long m : divisors(n)) {
    const int mu = mobius(n / m);
    if (mu == 0) continue;
    const C term = adams(s[static_cast<int>(m)], n / m);
    if (mu > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / Rational(n);
}

void require_rank(const Rational& v, int n, int index) {
  if (!is_integer(v) || sgn(v) < 0) {
    throw IntegralityError("necklace rank at degree " + std::to_string(n) +
                           (index >= 0 ? ", character " + std::to_string(index) : std::string()) +
                           " is not a nonnegative integer: " + v.get_str());
  }
}

}  // namespace

Rational necklace_ranks(const Series& poly, int n, const RingMode& mode) {
  if (n < 1) throw UsageError("necklace ranks start at degree 1");
  const PowerSums<Rational> s = newton_power_sums(poly, n);
  Rational total = 0;
  for (int d : fp_degrees(n, mode)) total += necklace_value(s, d);
  require_rank(total, n, -1);
  return total;
}

GroupRingElt equivariant_necklace_ranks(const EqSeries& poly, int n, const RingMode& mode) {
  if (n < 1) throw UsageError("necklace ranks start at degree 1");
  const int q = poly[0].q();
  const PowerSums<GroupRingElt> s = newton_power_sums(poly, n);
  GroupRingElt total(q);
  for (int d : fp_degrees(n, mode)) {
    if (q > 1 && gcd(d, q) != 1) {
      throw UnsupportedDegreeError("equivariant necklace ranks need gcd(n, q) = 1; got n=" +
                                   std::to_string(d) + ", q=" + std::to_string(q));
    }
    total += necklace_value(s, d);
  }
  for (int i = 0; i < q; ++i) require_rank(total[i], n, i);
  return total;
}

std::string dominance_name(Dominance d) {
  switch (d) {
    case Dominance::kUniqueRealDominant:
      return "unique-real-dominant";
    case Dominance::kTied:
      return "tied";
    case Dominance::kComplexDominant:
      return "complex-dominant";
    case Dominance::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kAllEigenspacesInfinite:
      return "all-eigenspaces-infinite";
    case Verdict::kAnalyticLike:
      return "analytic-like";
    case Verdict::kInconclusive:
      return "inconclusive";
    case Verdict::kTrivial:
      return "trivial";
  }
  return "inconclusive";
}

// ------------------------------------------------- exact polynomials

namespace {

// Dense polynomial over Q, lowest degree first, no trailing zeros.
using RPoly = std::vector<Rational>;

void trim(RPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int deg(const RPoly& f) { return static_cast<int>(f.size()) - 1; }

RPoly derivative(const RPoly& f) {
  RPoly out;
  for (int k = 1; k <= deg(f); ++k) out.push_back(f[k] * k);
  trim(out);
  return out;
}

RPoly remainder(RPoly a, const RPoly& b) {
  trim(a);
  const int db = deg(b);
  while (deg(a) >= db) {
    const Rational factor = a.back() / b.back();
    const int shift = deg(a) - db;
    for (int k = 0; k <= db; ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
  trim(a);
  const int db = deg(b);
  if (deg(a) < db) return {};
  RPoly q(deg(a) - db + 1, Rational(0));
  while (deg(a) >= db) {
    const Rational factor = a.back() / b.back();
    const int shift = deg(a) - db;
    q[shift] = factor;
    for (int k = 0; k <= db; ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

RPoly monic(RPoly f) {
  if (f.empty()) return f;
  const Rational lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

RPoly poly_gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

int sign_at(const RPoly& f, const Rational& x) {
  Rational acc = 0;
  for (int k = deg(f); k >= 0; --k) acc = acc * x + f[k];
  return sgn(acc);
}

std::vector<RPoly> sturm_chain(const RPoly& f) {
  std::vector<RPoly> chain{f, derivative(f)};
  while (!chain.back().empty()) {
    RPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations(const std::vector<RPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& f : chain) signs.push_back(sign_at(f, x));
  return count_changes(signs);
}

// Distinct roots of a squarefree f in (a, b].
int roots_between(const std::vector<RPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

RPoly squarefree(const RPoly& f) {
  const RPoly g = poly_gcd(f, derivative(f));
  return deg(g) <= 0 ? f : quotient(f, g);
}

// Monic polynomial whose roots are the inverse roots of `poly`.
RPoly reversal(const Series& poly) {
  const int d = std::max(0, poly.degree());
  RPoly r(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k) r[d - k] = poly[k];
  trim(r);
  return r;
}

Rational cauchy_bound(const RPoly& f) {
  Rational m = 0;
  for (int k = 0; k < deg(f); ++k) {
    Rational a = abs(f[k] / f.back());
    if (a > m) m = a;
  }
  return m + 1;
}

void require_unit_constant(const Series& poly) {
  if (poly[0] != 1) throw UsageError("eigenvalue analysis needs constant term 1");
}

}  // namespace

int count_positive_eigenvalues(const Series& poly) {
  require_unit_constant(poly);
  const RPoly r = reversal(poly);
  if (deg(r) < 1) return 0;
  const auto chain = sturm_chain(squarefree(r));
  return roots_between(chain, Rational(0), cauchy_bound(r));
}

std::optional<RealRootBracket> largest_positive_eigenvalue(const Series& poly, int bits) {
  require_unit_constant(poly);
  const RPoly r = reversal(poly);
  if (deg(r) < 1) return std::nullopt;
  const RPoly sf = squarefree(r);
  const auto chain = sturm_chain(sf);
  const Rational bound = cauchy_bound(r);
  if (roots_between(chain, Rational(0), bound) == 0) return std::nullopt;

  RealRootBracket out;
  out.lo = 0;
  out.hi = bound;
  for (int i = 0; i < bits; ++i) {
    const Rational mid = (out.lo + out.hi) / 2;
    if (roots_between(chain, mid, bound) >= 1) {
      out.lo = mid;
    } else {
      out.hi = mid;
    }
  }
  const RPoly repeated = poly_gcd(r, derivative(r));
  if (deg(repeated) >= 1) {
    out.simple = roots_between(sturm_chain(squarefree(repeated)), out.lo, out.hi) == 0;
  }
  out.above_one = roots_between(chain, Rational(1), bound) >= 1;
  return out;
}

// ------------------------------------------------- numeric isolation

namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& f, cld z) {
  cld acc = 0;
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

cld horner_derivative(const std::vector<long double>& f, cld z) {
  cld acc = 0;
  for (int k = static_cast<int>(f.size()) - 1; k >= 1; --k) {
    acc = acc * z + static_cast<long double>(k) * f[k];
  }
  return acc;
}

// Bound on the rounding error of horner(f, z).
long double horner_error(const std::vector<long double>& f, cld z) {
  const long double r = std::abs(z);
  long double acc = 0;
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) acc = acc * r + std::fabs(f[k]);
  return acc * LDBL_EPSILON * (4.0L * static_cast<long double>(f.size()) + 4.0L);
}

}  // namespace

std::vector<RootEstimate> isolate_roots(const Series& poly, bool* disjoint) {
  require_unit_constant(poly);
  const RPoly r = reversal(poly);
  const int d = deg(r);
  if (disjoint) *disjoint = true;
  if (d < 1) return {};

  std::vector<long double> f;
  for (const auto& c : r) f.push_back(static_cast<long double>(c.get_d()));
  const long double radius = static_cast<long double>(cauchy_bound(r).get_d());

  // Aberth-Ehrlich iteration from points spread on a circle.
  std::vector<cld> z(d);
  for (int i = 0; i < d; ++i) {
    const long double angle = 2.0L * 3.14159265358979323846L * i / d + 0.4L;
    z[i] = std::polar(radius * 0.5L + 0.1L, angle);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    long double largest_step = 0;
    for (int i = 0; i < d; ++i) {
      const cld value = horner(f, z[i]);
      if (value == cld(0)) continue;
      const cld ratio = value / horner_derivative(f, z[i]);
      cld repulsion = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * repulsion);
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (largest_step < 8 * LDBL_EPSILON) break;
  }

  // Weierstrass inclusion disks: each root of f lies in the union of
  // D(z_i, d |f(z_i)| / prod_{j != i} |z_i - z_j|); disjoint disks hold one root each.
  std::vector<RootEstimate> out(d);
  for (int i = 0; i < d; ++i) {
    long double denom = 1;
    for (int j = 0; j < d; ++j) {
      if (j != i) denom *= std::abs(z[i] - z[j]);
    }
    const long double residual = std::abs(horner(f, z[i])) + horner_error(f, z[i]);
    long double rad = denom > 0 ? d * residual / denom : INFINITY;
    rad = rad * (1.0L + 1e-6L) + 16 * LDBL_EPSILON * std::max(1.0L, std::abs(z[i]));
    out[i].value = std::complex<double>(static_cast<double>(z[i].real()),
                                        static_cast<double>(z[i].imag()));
    out[i].radius = static_cast<double>(rad) + 4 * DBL_EPSILON * std::abs(out[i].value);
  }
  bool ok = true;
  for (int i = 0; i < d && ok; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(out[i].value - out[j].value) <= out[i].radius + out[j].radius) {
        ok = false;
        break;
      }
    }
  }
  if (disjoint) *disjoint = ok;
  std::sort(out.begin(), out.end(), [](const RootEstimate& a, const RootEstimate& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return out;
}

// ------------------------------------------------------------ verdicts

namespace {

std::string three_figures(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

void fill_evidence(SpectrumReport& report, const Series& poly, const ScalarBTable* given) {
  constexpr int kFirst = 8;
  constexpr int kLast = 24;
  ScalarBTable computed;
  if (!given) {
    computed = b_table_from_series(ser_inv(poly.truncated(kLast)), Flavor::kChi0);
    given = &computed;
  }
  const double lambda = Rational((report.dominant_real->lo + report.dominant_real->hi) / 2).get_d();
  for (int n = kFirst; n <= kLast; ++n) {
    if (!given->has(n)) continue;
    const double ratio = given->at(n).get_d() * n / std::pow(lambda, n);
    report.evidence.push_back({n, ratio});
  }
  if (report.evidence.empty()) return;
  const std::string last = three_figures(report.evidence.back().ratio);
  int settled = report.evidence.back().degree;
  for (auto it = report.evidence.rbegin(); it != report.evidence.rend(); ++it) {
    if (three_figures(it->ratio) != last) break;
    settled = it->degree;
  }
  report.evidence_stable = settled == report.evidence.front().degree;
  // A settled value needs at least three agreeing degrees to count.
  if (report.evidence.back().degree - settled >= 2) report.evidence_settled_from = settled;
}

}  // namespace

SpectrumReport entropy_verdict(const Series& chi0_poly, double tolerance, const ScalarBTable* b) {
  require_unit_constant(chi0_poly);
  SpectrumReport report;
  const int d = std::max(0, chi0_poly.degree());
  report.polynomial = chi0_poly.truncated(d);
  if (d == 0) {
    report.dominance = Dominance::kInconclusive;
    report.verdict = Verdict::kTrivial;
    report.reason = "constant polynomial has no eigenvalues";
    return report;
  }

  report.eigenvalues = isolate_roots(report.polynomial, &report.disks_disjoint);
  report.dominant_real = largest_positive_eigenvalue(report.polynomial);
  for (const auto& e : report.eigenvalues) {
    report.entropy_lo = std::max(report.entropy_lo, std::abs(e.value) - e.radius);
    report.entropy_hi = std::max(report.entropy_hi, std::abs(e.value) + e.radius);
  }

  if (!report.disks_disjoint) {
    report.dominance = Dominance::kInconclusive;
    report.reason = "eigenvalue inclusion disks overlap";
  } else if (!report.dominant_real) {
    report.dominance = Dominance::kComplexDominant;
    report.reason = "no positive real eigenvalue";
  } else if (!report.dominant_real->simple) {
    report.dominance = Dominance::kTied;
    report.reason = "largest positive eigenvalue is repeated";
  } else {
    const double lo = report.dominant_real->lo.get_d();
    const double hi = report.dominant_real->hi.get_d();
    const double mid = (lo + hi) / 2;
    std::size_t candidate = 0;
    for (std::size_t i = 1; i < report.eigenvalues.size(); ++i) {
      if (std::abs(report.eigenvalues[i].value - mid) <
          std::abs(report.eigenvalues[candidate].value - mid)) {
        candidate = i;
      }
    }
    double others_hi = 0;
    bool some_larger = false;
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
      if (i == candidate) continue;
      const auto& e = report.eigenvalues[i];
      others_hi = std::max(others_hi, std::abs(e.value) + e.radius);
      if (std::abs(e.value) - e.radius > hi + tolerance) some_larger = true;
    }
    if (others_hi < lo - tolerance) {
      report.dominance = Dominance::kUniqueRealDominant;
      report.entropy_lo = lo;
      report.entropy_hi = hi;
      report.reason = "largest positive eigenvalue is simple and strictly dominant";
    } else if (some_larger) {
      // Dominated by a non-positive or non-real eigenvalue.
      report.dominance = Dominance::kComplexDominant;
      report.reason = "an eigenvalue off the positive axis has larger modulus";
    } else {
      report.dominance = Dominance::kTied;
      report.reason = "modulus gap below tolerance";
    }
  }

  if (report.dominance == Dominance::kUniqueRealDominant) {
    report.verdict = report.dominant_real->above_one ? Verdict::kAllEigenspacesInfinite
                                                     : Verdict::kAnalyticLike;
    if (!report.dominant_real->above_one) report.reason += "; entropy is at most 1";
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  if (report.dominant_real) fill_evidence(report, report.polynomial, b);
  return report;
}

SpectrumReport free_group_verdict(const PresentationSpec& spec) {
  if (!spec.relations.empty()) throw UsageError("free_group_verdict needs a presentation without relations");
  const int rank = static_cast<int>(spec.generators.size());
  SpectrumReport report;
  std::vector<Rational> poly{1};
  if (rank > 0) poly.push_back(-rank);
  report.polynomial = Series(static_cast<int>(poly.size()) - 1, poly);
  if (rank == 0) {
    report.verdict = Verdict::kTrivial;
    report.reason = "trivial group";
    return report;
  }
  report.eigenvalues = isolate_roots(report.polynomial, &report.disks_disjoint);
  report.dominant_real = largest_positive_eigenvalue(report.polynomial);
  report.entropy_lo = report.entropy_hi = rank;
  report.dominance = Dominance::kUniqueRealDominant;
  if (rank == 1) {
    report.verdict = Verdict::kAnalyticLike;
    report.reason = "free pro-p group of rank 1 is analytic";
    return report;
  }
  if (spec.q > 1 && spec.generators_with_char(0) == rank) {
    report.verdict = Verdict::kInconclusive;
    report.reason = "every generator carries the trivial character, so nontrivial eigenspaces vanish";
    return report;
  }
  report.verdict = Verdict::kAllEigenspacesInfinite;
  report.reason = "noncommutative free pro-p group";
  return report;
}

}  // namespace gocha
