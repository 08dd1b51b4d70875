#pragma once

// Quadratic-field inputs for the FAB examples: splitting of rational primes
// in Q(sqrt(-d)), tameness, Koch linking numbers, and the resulting series.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gocha/presentation.hpp"
#include "gocha/series.hpp"

namespace gocha {

enum class SplitStatus { kSplit, kInert, kRamified };
std::string split_status_name(SplitStatus s);

// Discriminant of Q(sqrt(-d)) for squarefree d > 0: -d if d = 3 mod 4, else -4d.
std::int64_t field_discriminant(std::int64_t d);

// Kronecker symbol (a / n) for n > 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

// Splitting of `prime` in Q(sqrt(-d)). A composite odd modulus is answered
// with the Jacobi symbol and a warning appended to `warnings`.
SplitStatus kronecker_split(std::int64_t d, std::int64_t prime,
                            std::vector<std::string>* warnings = nullptr);

struct SplittingDatum {
  std::int64_t prime = 0;
  SplitStatus status = SplitStatus::kInert;
  bool tame = false;
};

// Norm of a place above `prime` is 1 mod p: prime for split and ramified
// places, prime^2 for inert ones.
bool tame_check(std::int64_t p, std::int64_t prime, SplitStatus status);

// Entry (i, j) is the discrete log, base g_j^((p_j - 1)/p) with g_j the
// smallest primitive root mod p_j, of p_i^((p_j - 1)/p); zero exactly when
// p_i^((p_j - 1)/p) = 1 mod p_j. Needs every p_j prime and 1 mod p.
std::vector<std::vector<int>> linking_matrix(std::int64_t p, const std::vector<std::int64_t>& primes);

std::int64_t smallest_primitive_root(std::int64_t prime);

struct FabSeries {
  EqSeries chi_eul_star;  // 1 - (i+s+s chi0) t + (i+s+s chi0) t^2
  Series chi_eul_chi0;    // 1 - s t - i t^2 + (s+i) t^4
  EqSeries gocha_star;
  Series gocha_chi0;
};

// Series for i inert-or-ramified and s split places, q = 2.
FabSeries fab_series(int inert_count, int split_count, int trunc);

// Presentation with explicit relation degrees reproducing fab_series
// through gocha_from_presentation.
PresentationSpec koch_presentation(std::int64_t p, std::int64_t d,
                                   const std::vector<std::int64_t>& primes);

struct FabInput {
  std::int64_t p = 3;
  std::int64_t d = 1;
  std::vector<std::int64_t> primes;
  bool assert_mild = false;
  // Printed denominators to compare against, if any.
  std::optional<std::vector<std::vector<long>>> reference_star;  // per degree, q = 2 entries
  std::optional<std::vector<long>> reference_chi0;
};

FabInput parse_fab_input(const std::string& json_text);

struct FabResult {
  FabInput input;
  std::vector<SplittingDatum> splitting;
  int inert_count = 0;
  int split_count = 0;
  std::vector<std::int64_t> linking_primes;  // primes the matrix is indexed by
  std::vector<std::vector<int>> linking;
  FabSeries series;
  PresentationSpec presentation;
  bool paths_agree = false;  // presentation route reproduces fab_series
  std::vector<std::string> warnings;
};

// Full arithmetic pipeline; throws DomainError on a non-tame place.
FabResult run_fab(const FabInput& input, int trunc);

}  // namespace gocha
