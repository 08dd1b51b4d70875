#pragma once

// Brute-force ground truth: graded quotients of the truncated free
// associative algebra over F_p, and Lyndon word counts for free groups.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gocha/group_ring.hpp"
#include "gocha/presentation.hpp"

namespace gocha {

enum class Grading { kStandard, kChi0 };
enum class MonomialOrder { kLex, kRevLex };

std::string grading_name(Grading g);

// Default per-degree monomial budget; GOCHA_MAX_MONOMIALS overrides it.
constexpr std::int64_t kDefaultMaxMonomials = 200000;
std::int64_t monomial_budget();

struct GradedQuotient {
  int trunc = 0;
  Grading grading = Grading::kStandard;
  int q = 1;
  // Indexed by degree 0..trunc.
  std::vector<std::int64_t> monomials;
  std::vector<std::int64_t> ideal_rank;
  std::vector<std::int64_t> dims;
  std::vector<std::vector<std::int64_t>> char_dims;  // [degree][character]
  // Per-character ranks of the leading forms add up to the total rank.
  bool character_homogeneous = true;
};

// Dimensions of gr(E/I) over F_p up to degree N, where E is the free
// associative algebra on the generators (graded by word length or by
// chi0-weight) and I is spanned by m1 * (phi(l) - 1) * m2 for the word
// relations l. Explicit-degree relations are rejected.
GradedQuotient quotient_ranks(const PresentationSpec& spec, int N, Grading grading,
                              int chi0_exponent = 1, MonomialOrder order = MonomialOrder::kLex,
                              std::int64_t max_monomials = -1);

// Lyndon words of length <= N over letters with the given characters,
// bucketed by (length, character).
using LyndonTable = std::map<std::pair<int, int>, std::int64_t>;
LyndonTable lyndon_counts(const std::vector<int>& generator_chars, int q, int N);

struct CrosscheckEntry {
  std::string check;
  int degree = 0;
  int char_index = -1;  // -1 for totals
  std::string expected;
  std::string actual;
  bool match = true;
};

struct CrosscheckReport {
  int trunc = 0;
  GradedQuotient standard;
  GradedQuotient filtered;  // chi0 grading
  std::vector<CrosscheckEntry> entries;
  std::vector<std::string> warnings;
  bool all_match() const;
  std::optional<int> first_mismatch_degree() const;
};

// Oracle vs formula tables: c_n and c_n^chi against gocha and gocha*,
// c_{chi0,n} against gocha_chi0, free-case Lyndon counts against the
// inversion pipeline, the two inequality families linking the gradings,
// and the character support of the chi0-graded quotient.
CrosscheckReport crosscheck(const PresentationSpec& spec, int N, const RingMode& mode,
                            int chi0_exponent = 1);

}  // namespace gocha
