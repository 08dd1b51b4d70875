#include "gocha/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <unordered_map>

#include "gocha/errors.hpp"
#include "gocha/inversion.hpp"

namespace gocha {

std::string grading_name(Grading g) { return g == Grading::kChi0 ? "chi0" : "standard"; }

std::int64_t monomial_budget() {
  const char* env = std::getenv("GOCHA_MAX_MONOMIALS");
  if (!env || !*env) return kDefaultMaxMonomials;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(env, &used);
    if (used != std::string(env).size() || value < 1) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("GOCHA_MAX_MONOMIALS must be a positive integer, got \"") + env +
                     "\"");
  }
}

namespace {

using Word = NCPoly::Word;
using Entry = std::pair<int, std::uint32_t>;  // (column, coefficient mod p)
using Row = std::vector<Entry>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(mod_inverse(a, p));
}

std::string key_of(const Word& w) { return std::string(w.begin(), w.end()); }

// Incremental row echelon form over F_p; pivots are leftmost columns.
class Echelon {
 public:
  Echelon(std::size_t columns, std::uint32_t p) : pivots_(columns), p_(p) {}

  void insert(Row row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      const Row& pivot = pivots_[lead];
      if (pivot.empty()) {
        const std::uint64_t inv = inverse_mod(row.front().second, p_);
        for (auto& e : row) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
        pivots_[lead] = std::move(row);
        return;
      }
      row = subtract(row, pivot, row.front().second);
    }
  }

  const std::vector<Row>& pivots() const { return pivots_; }

 private:
  // a - factor * b, with b's leading entry 1.
  Row subtract(const Row& a, const Row& b, std::uint64_t factor) const {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
        continue;
      }
      const std::uint64_t sub = factor * b[j].second % p_;
      std::uint64_t value = p_ - sub;
      if (i < a.size() && a[i].first == b[j].first) value += a[i++].second;
      value %= p_;
      if (value != 0) out.emplace_back(b[j].first, static_cast<std::uint32_t>(value));
      ++j;
    }
    return out;
  }

  std::vector<Row> pivots_;
  std::uint32_t p_;
};

// Rank over F_p of a set of sparse rows (columns arbitrary ints).
std::int64_t rank_of(std::vector<Row> rows, std::uint32_t p, std::size_t columns) {
  Echelon e(columns, p);
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    e.insert(std::move(r));
  }
  std::int64_t rank = 0;
  for (const auto& piv : e.pivots()) rank += piv.empty() ? 0 : 1;
  return rank;
}

}  // namespace

GradedQuotient quotient_ranks(const PresentationSpec& spec, int N, Grading grading,
                              int chi0_exponent, MonomialOrder order, std::int64_t max_monomials) {
  if (N < 0) throw UsageError("oracle degree must be nonnegative");
  if (!is_prime(spec.p)) throw UsageError("oracle needs a prime p");
  for (const auto& rel : spec.relations) {
    if (!rel.word) {
      throw UsageError("the oracle needs relation words; explicit-degree relations have no expansion");
    }
  }
  if (max_monomials < 0) max_monomials = monomial_budget();

  const int g = static_cast<int>(spec.generators.size());
  const int q = spec.q;
  std::vector<int> weights(g, 1);
  if (grading == Grading::kChi0) {
    for (int j = 0; j < g; ++j) {
      weights[j] = char_weight(spec.generators[j].char_index, q, chi0_exponent);
    }
  }

  GradedQuotient out;
  out.trunc = N;
  out.grading = grading;
  out.q = q;

  // Monomial counts per weight, checked against the budget before enumerating.
  std::vector<std::int64_t> counts(N + 1, 0);
  counts[0] = 1;
  for (int n = 1; n <= N; ++n) {
    for (int j = 0; j < g; ++j) {
      if (weights[j] <= n) counts[n] += counts[n - weights[j]];
    }
    if (counts[n] > max_monomials) {
      throw ResourceError("degree " + std::to_string(n) + " has " + std::to_string(counts[n]) +
                              " monomials, over the budget of " + std::to_string(max_monomials),
                          n - 1);
    }
  }

  std::vector<std::vector<Word>> by_weight(N + 1);
  std::function<void(Word&, int)> grow = [&](Word& w, int weight) {
    by_weight[weight].push_back(w);
    for (int j = 0; j < g; ++j) {
      if (weight + weights[j] > N) continue;
      w.push_back(j);
      grow(w, weight + weights[j]);
      w.pop_back();
    }
  };
  Word empty;
  grow(empty, 0);

  std::unordered_map<std::string, int> column;
  std::vector<int> column_weight;
  std::vector<int> column_char;
  for (int n = 0; n <= N; ++n) {
    auto& words = by_weight[n];
    if (order == MonomialOrder::kLex) {
      std::sort(words.begin(), words.end());
    } else {
      std::sort(words.begin(), words.end(), std::greater<Word>());
    }
    for (const auto& w : words) {
      long c = 0;
      for (int letter : w) c += spec.generators[letter].char_index;
      column.emplace(key_of(w), static_cast<int>(column_weight.size()));
      column_weight.push_back(n);
      column_char.push_back(static_cast<int>(floor_mod(c, q)));
    }
  }

  const auto p = static_cast<std::uint32_t>(spec.p);
  Echelon echelon(column_weight.size(), p);
  auto word_weight = [&](const Word& w) {
    int s = 0;
    for (int letter : w) s += weights[letter];
    return s;
  };

  for (const auto& rel : spec.relations) {
    const NCPoly f = magnus_expand(*rel.word, std::max(N, 1), RingMode::fp(spec.p), weights);
    if (f.is_zero()) continue;
    const int order_f = f.min_weight();
    std::vector<std::pair<Word, std::uint32_t>> terms;
    for (const auto& [w, c] : f.terms()) {
      terms.emplace_back(w, static_cast<std::uint32_t>(c.get_ui()));
    }
    for (int left = 0; left + order_f <= N; ++left) {
      for (const auto& m1 : by_weight[left]) {
        for (int right = 0; left + right + order_f <= N; ++right) {
          for (const auto& m2 : by_weight[right]) {
            Row row;
            for (const auto& [w, c] : terms) {
              if (left + right + word_weight(w) > N) continue;
              Word full = m1;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), m2.begin(), m2.end());
              row.emplace_back(column.at(key_of(full)), c);
            }
            std::sort(row.begin(), row.end());
            echelon.insert(std::move(row));
          }
        }
      }
    }
  }

  out.monomials = counts;
  out.ideal_rank.assign(N + 1, 0);
  out.dims.assign(N + 1, 0);
  out.char_dims.assign(N + 1, std::vector<std::int64_t>(q, 0));

  // Leading forms: the weight-n part of each pivot row whose pivot has weight n.
  std::vector<std::vector<std::vector<Row>>> blocks(N + 1, std::vector<std::vector<Row>>(q));
  const auto& pivots = echelon.pivots();
  for (std::size_t col = 0; col < pivots.size(); ++col) {
    if (pivots[col].empty()) continue;
    const int n = column_weight[col];
    ++out.ideal_rank[n];
    std::vector<Row> parts(q);
    for (const auto& [c, v] : pivots[col]) {
      if (column_weight[c] != n) continue;
      parts[column_char[c]].emplace_back(c, v);
    }
    for (int i = 0; i < q; ++i) {
      if (!parts[i].empty()) blocks[n][i].push_back(std::move(parts[i]));
    }
  }

  std::vector<std::vector<std::int64_t>> char_monomials(N + 1, std::vector<std::int64_t>(q, 0));
  for (std::size_t col = 0; col < column_weight.size(); ++col) {
    ++char_monomials[column_weight[col]][column_char[col]];
  }
  for (int n = 0; n <= N; ++n) {
    out.dims[n] = counts[n] - out.ideal_rank[n];
    std::int64_t block_total = 0;
    for (int i = 0; i < q; ++i) {
      const std::int64_t r = rank_of(std::move(blocks[n][i]), p, column_weight.size());
      block_total += r;
      out.char_dims[n][i] = char_monomials[n][i] - r;
    }
    if (block_total != out.ideal_rank[n]) out.character_homogeneous = false;
  }
  return out;
}

LyndonTable lyndon_counts(const std::vector<int>& generator_chars, int q, int N) {
  LyndonTable table;
  const int g = static_cast<int>(generator_chars.size());
  if (g == 0 || N < 1) return table;
  // Duval's generation of all Lyndon words of length <= N in lexicographic order.
  std::vector<int> w{0};
  while (!w.empty()) {
    long c = 0;
    for (int letter : w) c += generator_chars[letter];
    ++table[{static_cast<int>(w.size()), static_cast<int>(floor_mod(c, q))}];
    const std::size_t period = w.size();
    while (static_cast<int>(w.size()) < N) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == g - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return table;
}

// ------------------------------------------------------------ crosscheck

bool CrosscheckReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const CrosscheckEntry& e) { return e.match; });
}

std::optional<int> CrosscheckReport::first_mismatch_degree() const {
  std::optional<int> best;
  for (const auto& e : entries) {
    if (!e.match && (!best || e.degree < *best)) best = e.degree;
  }
  return best;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void add(CrosscheckReport& r, std::string check, int degree, int index, const std::string& expected,
         const std::string& actual, bool match) {
  r.entries.push_back({std::move(check), degree, index, expected, actual, match});
}

void add_equal(CrosscheckReport& r, const std::string& check, int degree, int index,
               const Rational& expected, std::int64_t actual) {
  add(r, check, degree, index, expected.get_str(), std::to_string(actual),
      expected == Rational(static_cast<long>(actual)));
}

// Restricted Lie ranks of a free algebra in Fp-mode: the p^j-th power of a
// Lyndon element of degree m and character c has degree m p^j and character c p^j.
std::int64_t free_rank(const LyndonTable& lyndon, int n, int index, int q, const RingMode& mode) {
  auto get = [&](int deg, int c) {
    auto it = lyndon.find({deg, c});
    return it == lyndon.end() ? std::int64_t{0} : it->second;
  };
  auto matching = [&](int deg, long twist) {
    std::int64_t s = 0;
    for (int c = 0; c < q; ++c) {
      if (index < 0 || floor_mod(static_cast<std::int64_t>(c) * twist, q) == index) s += get(deg, c);
    }
    return s;
  };
  std::int64_t total = matching(n, 1);
  if (mode.is_fp()) {
    long twist = 1;
    for (long d = n; d % mode.p == 0;) {
      d /= mode.p;
      twist = static_cast<long>(floor_mod(twist * mode.p, q));
      total += matching(static_cast<int>(d), twist);
    }
  }
  return total;
}

}  // namespace

CrosscheckReport crosscheck(const PresentationSpec& spec, int N, const RingMode& mode,
                            int chi0_exponent) {
  CrosscheckReport report;
  report.trunc = N;
  const int q = spec.q;

  report.standard = quotient_ranks(spec, N, Grading::kStandard, chi0_exponent);
  report.filtered = quotient_ranks(spec, N, Grading::kChi0, chi0_exponent);
  const GradedQuotient& standard = report.standard;
  const GradedQuotient& filtered = report.filtered;
  if (!standard.character_homogeneous || !filtered.character_homogeneous) {
    report.warnings.push_back("leading forms of the ideal are not character homogeneous");
  }

  // Inverted Euler polynomials without the sign check: a negative
  // coefficient must show up as a mismatch here, not hide the comparison.
  std::optional<GochaSeries> series;
  try {
    GochaSeries s;
    s.euler = euler_polys(spec, mode, chi0_exponent);
    s.gocha = ser_inv(s.euler.chi_eul.truncated(N));
    s.gocha_star = ser_inv(s.euler.chi_eul_star.truncated(N));
    s.gocha_chi0 = ser_inv(s.euler.chi_eul_chi0.truncated(N));
    for (const auto& w : s.euler.warnings) report.warnings.push_back(w);
    series = std::move(s);
  } catch (const Error& e) {
    report.warnings.push_back(std::string("series side unavailable: ") + e.what());
    add(report, "series", 0, -1, "available", "unavailable", false);
  }

  if (series) {
    for (int n = 0; n <= N; ++n) {
      add_equal(report, "c", n, -1, series->gocha[n], standard.dims[n]);
      for (int i = 0; i < q; ++i) {
        add_equal(report, "c_char", n, i, series->gocha_star[n][i], standard.char_dims[n][i]);
      }
      add_equal(report, "c_chi0", n, -1, series->gocha_chi0[n], filtered.dims[n]);
    }
  }

  // Character support of the chi0-graded quotient: weight n sits in the
  // character whose weight is n mod q.
  for (int n = 0; n <= N; ++n) {
    const int expected = static_cast<int>(floor_mod(static_cast<std::int64_t>(n) * chi0_exponent, q));
    std::string found;
    bool ok = true;
    for (int i = 0; i < q; ++i) {
      if (filtered.char_dims[n][i] == 0) continue;
      if (!found.empty()) found += ",";
      found += std::to_string(i);
      if (i != expected) ok = false;
    }
    add(report, "delact", n, expected, std::to_string(expected), found.empty() ? "-" : found, ok);
  }

  // c_{chi0, qn+i} <= sum_{j=n}^{qn+i} c_j^{chi}, chi the character of weight i.
  for (int total = 0; total <= N; ++total) {
    const int n = total / q;
    const int i = total % q;
    const int index = static_cast<int>(floor_mod(static_cast<std::int64_t>(i) * chi0_exponent, q));
    std::int64_t rhs = 0;
    for (int j = n; j <= total; ++j) rhs += standard.char_dims[j][index];
    const std::int64_t lhs = filtered.dims[total];
    add(report, "comp_chi0_bound", total, index, "<= " + std::to_string(rhs), std::to_string(lhs),
        lhs <= rhs);
  }

  // c_n^chi <= sum_k c_{chi0, qk+psi}, n <= qk+psi <= qn, when all terms are in range.
  for (int n = 0; n <= N; ++n) {
    for (int index = 0; index < q; ++index) {
      const int psi = char_weight(index, q, chi0_exponent);
      const std::int64_t k_lo = ceil_div(n - psi, q);
      const std::int64_t k_hi = floor_div(static_cast<std::int64_t>(q) * n - psi, q);
      if (k_hi >= k_lo && q * k_hi + psi > N) continue;
      std::int64_t rhs = 0;
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const std::int64_t w = q * k + psi;
        if (w >= 0) rhs += filtered.dims[w];
      }
      const std::int64_t lhs = standard.char_dims[n][index];
      add(report, "comp_char_bound", n, index, "<= " + std::to_string(rhs), std::to_string(lhs),
          lhs <= rhs);
    }
  }

  if (spec.is_free() && !spec.generators.empty()) {
    std::vector<int> chars;
    for (const auto& g : spec.generators) chars.push_back(g.char_index);
    const LyndonTable lyndon = lyndon_counts(chars, q, N);
    const Series free_poly(1, std::vector<Rational>{1, -static_cast<long>(chars.size())});
    const RankTable scalar = a_from_w(w_table(b_table_from_series(ser_inv(free_poly.truncated(N)),
                                                                  Flavor::kScalar)),
                                      mode);
    for (int n = 1; n <= N; ++n) {
      const std::int64_t expected = free_rank(lyndon, n, -1, q, mode);
      add(report, "lyndon", n, -1, std::to_string(expected), std::to_string(scalar.total(n)),
          expected == scalar.total(n));
    }
    if (q > 1) {
      EqSeries star = EqSeries::constant(1, GroupRingElt::one(q));
      for (int c : chars) star[1] -= GroupRingElt::basis(q, c);
      const RankTable eq = a_from_w(
          w_table(b_table_from_series(ser_inv(star.truncated(N)), Flavor::kEquivariant)), mode);
      for (int n = 1; n <= N; ++n) {
        bool available = true;
        if (mode.is_fp()) {
          for (long d = n; d % mode.p == 0;) {
            d /= mode.p;
            if (gcd(d, q) != 1) available = false;
          }
        }
        if (gcd(n, q) != 1 || !available) continue;
        for (int i = 0; i < q; ++i) {
          const std::int64_t expected = free_rank(lyndon, n, i, q, mode);
          add(report, "lyndon_char", n, i, std::to_string(expected), std::to_string(eq.get(n, i)),
              expected == eq.get(n, i));
        }
      }
    }
  }
  return report;
}

}  // namespace gocha
