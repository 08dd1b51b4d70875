#include "gocha/arithmetic.hpp"

#include <set>

#include <json.hpp>

#include "gocha/errors.hpp"

namespace gocha {

std::string split_status_name(SplitStatus s) {
  switch (s) {
    case SplitStatus::kSplit:
      return "split";
    case SplitStatus::kInert:
      return "inert";
    case SplitStatus::kRamified:
      return "ramified";
  }
  return "inert";
}

namespace {

bool squarefree(std::int64_t d) {
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

// Jacobi symbol (a / n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a = floor_mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

std::int64_t field_discriminant(std::int64_t d) {
  if (d < 1 || !squarefree(d)) {
    throw DomainError("d = " + std::to_string(d) + " must be a squarefree positive integer");
  }
  return d % 4 == 3 ? -d : -4 * d;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n < 1) throw DomainError("Kronecker symbol needs a positive modulus");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = floor_mod(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  return n == 1 ? result : result * jacobi(a, n);
}

SplitStatus kronecker_split(std::int64_t d, std::int64_t prime, std::vector<std::string>* warnings) {
  const std::int64_t disc = field_discriminant(d);
  if (prime < 2) throw DomainError("splitting needs a prime >= 2, got " + std::to_string(prime));
  if (!is_prime(prime) && warnings) {
    warnings->push_back(std::to_string(prime) +
                        " is not prime; its splitting is read from the Jacobi symbol");
  }
  const int symbol = kronecker_symbol(disc, prime);
  if (symbol == 0) return SplitStatus::kRamified;
  return symbol > 0 ? SplitStatus::kSplit : SplitStatus::kInert;
}

bool tame_check(std::int64_t p, std::int64_t prime, SplitStatus status) {
  if (p < 2) throw DomainError("p must be a prime");
  const std::int64_t norm = status == SplitStatus::kInert
                                ? mod_pow(prime, 2, p)
                                : floor_mod(prime, p);
  return norm == 1 % p;
}

std::int64_t smallest_primitive_root(std::int64_t prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (prime == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = prime - 1;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    factors.push_back(f);
    while (m % f == 0) m /= f;
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < prime; ++g) {
    bool primitive = true;
    for (std::int64_t f : factors) {
      if (mod_pow(g, (prime - 1) / f, prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DomainError("no primitive root found mod " + std::to_string(prime));
}

std::vector<std::vector<int>> linking_matrix(std::int64_t p, const std::vector<std::int64_t>& primes) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  for (std::int64_t pj : primes) {
    if (!is_prime(pj)) throw DomainError(std::to_string(pj) + " is not prime");
    if (pj % p != 1) {
      throw DomainError(std::to_string(pj) + " is not 1 mod " + std::to_string(p) +
                        "; no degree-p cyclic extension is tamely ramified there");
    }
  }
  const std::size_t n = primes.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t pj = primes[j];
    const std::int64_t e = (pj - 1) / p;
    const std::int64_t base = mod_pow(smallest_primitive_root(pj), e, pj);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const std::int64_t target = mod_pow(floor_mod(primes[i], pj), e, pj);
      std::int64_t power = 1;
      for (int k = 0; k < p; ++k) {
        if (power == target) {
          out[i][j] = k;
          break;
        }
        power = power * base % pj;
      }
    }
  }
  return out;
}

FabSeries fab_series(int inert_count, int split_count, int trunc) {
  if (inert_count < 0 || split_count < 0) throw DomainError("place counts must be nonnegative");
  const int i = inert_count;
  const int s = split_count;
  FabSeries out;
  GroupRingElt linear(2);
  linear[0] = i + s;
  linear[1] = s;
  out.chi_eul_star = EqSeries(2, GroupRingElt(2));
  out.chi_eul_star[0] = GroupRingElt::one(2);
  out.chi_eul_star[1] = -linear;
  out.chi_eul_star[2] = linear;
  out.chi_eul_chi0 = Series(4, std::vector<Rational>{1, -s, -i, 0, s + i});
  out.gocha_star = ser_inv(out.chi_eul_star.truncated(trunc));
  out.gocha_chi0 = ser_inv(out.chi_eul_chi0.truncated(trunc));
  return out;
}

namespace {

struct Places {
  std::vector<SplittingDatum> data;
  int inert = 0;
  int split = 0;
};

Places classify(std::int64_t p, std::int64_t d, const std::vector<std::int64_t>& primes,
                std::vector<std::string>* warnings) {
  if (!is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
  std::set<std::int64_t> seen;
  Places out;
  for (std::int64_t prime : primes) {
    if (prime == p) throw DomainError("the place set must avoid p itself");
    if (!seen.insert(prime).second) throw DomainError("prime " + std::to_string(prime) + " listed twice");
    SplittingDatum datum;
    datum.prime = prime;
    datum.status = kronecker_split(d, prime, warnings);
    datum.tame = tame_check(p, prime, datum.status);
    if (!datum.tame) {
      throw DomainError("places above " + std::to_string(prime) + " (" +
                        split_status_name(datum.status) + ") are not tame for p = " +
                        std::to_string(p));
    }
    if (datum.status == SplitStatus::kSplit) {
      ++out.split;
    } else {
      ++out.inert;
    }
    out.data.push_back(datum);
  }
  return out;
}

}  // namespace

PresentationSpec koch_presentation(std::int64_t p, std::int64_t d,
                                   const std::vector<std::int64_t>& primes) {
  const Places places = classify(p, d, primes, nullptr);
  PresentationSpec spec;
  spec.p = static_cast<int>(p);
  spec.q = 2;
  // A split prime contributes the eigencombinations x_P + x_Pbar (trivial)
  // and x_P - x_Pbar (chi0); an inert or ramified one a single trivial generator.
  for (const auto& datum : places.data) {
    const std::string tag = std::to_string(datum.prime);
    if (datum.status == SplitStatus::kSplit) {
      spec.generators.push_back({"u" + tag, 0});
      spec.generators.push_back({"v" + tag, 1});
    } else {
      spec.generators.push_back({"x" + tag, 0});
    }
  }
  // All relations are quadratic. Their chi0-degrees follow the published
  // Euler polynomial: s trivial relations of chi0-degree 2, the remaining
  // i + s relations of chi0-degree 4, s of those carrying chi0.
  const int i = places.inert;
  const int s = places.split;
  auto add = [&](int count, int char_index, int chi0_deg) {
    for (int k = 0; k < count; ++k) {
      Relation rel;
      rel.declared = RelationDegrees{char_index, 2, chi0_deg};
      spec.relations.push_back(rel);
    }
  };
  add(s, 0, 2);
  add(i, 0, 4);
  add(s, 1, 4);
  spec.mild = true;
  return spec;
}

FabInput parse_fab_input(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("arithmetic input is not valid JSON: ") + e.what(),
                     static_cast<long>(e.byte) - 1);
  }
  if (!doc.is_object()) throw ParseError("arithmetic input must be a JSON object");
  auto integer = [&](const char* key) -> std::int64_t {
    if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
      throw ParseError(std::string("arithmetic input needs an integer \"") + key + "\"");
    }
    return doc.at(key).get<std::int64_t>();
  };
  FabInput in;
  in.p = integer("p");
  in.d = integer("disc_d");
  if (!doc.contains("primes") || !doc.at("primes").is_array()) {
    throw ParseError("arithmetic input needs a \"primes\" array");
  }
  for (const auto& v : doc.at("primes")) {
    if (!v.is_number_integer()) throw ParseError("\"primes\" must hold integers");
    in.primes.push_back(v.get<std::int64_t>());
  }
  if (doc.contains("assert_mild")) {
    if (!doc.at("assert_mild").is_boolean()) throw ParseError("\"assert_mild\" must be a boolean");
    in.assert_mild = doc.at("assert_mild").get<bool>();
  }
  if (doc.contains("reference_denominators")) {
    const json& ref = doc.at("reference_denominators");
    if (!ref.is_object()) throw ParseError("\"reference_denominators\" must be an object");
    try {
      if (ref.contains("gocha_star")) in.reference_star = ref.at("gocha_star").get<std::vector<std::vector<long>>>();
      if (ref.contains("gocha_chi0")) in.reference_chi0 = ref.at("gocha_chi0").get<std::vector<long>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad reference denominators: ") + e.what());
    }
    if (in.reference_star) {
      for (const auto& row : *in.reference_star) {
        if (row.size() != 2) throw ParseError("reference gocha_star rows need 2 entries (q = 2)");
      }
    }
  }
  return in;
}

FabResult run_fab(const FabInput& input, int trunc) {
  FabResult out;
  out.input = input;
  const Places places = classify(input.p, input.d, input.primes, &out.warnings);
  out.splitting = places.data;
  out.inert_count = places.inert;
  out.split_count = places.split;
  if (!input.assert_mild) {
    out.warnings.push_back("mildness is not asserted; the series assume a mild quadratic presentation");
  }

  for (std::int64_t prime : input.primes) {
    if (is_prime(prime)) {
      out.linking_primes.push_back(prime);
    } else {
      out.warnings.push_back("linking matrix skips " + std::to_string(prime) + " (not prime)");
    }
  }
  out.linking = linking_matrix(input.p, out.linking_primes);

  out.series = fab_series(places.inert, places.split, trunc);
  out.presentation = koch_presentation(input.p, input.d, input.primes);
  const GochaSeries via = gocha_from_presentation(out.presentation, trunc, RingMode::fp(static_cast<int>(input.p)));
  out.paths_agree = via.gocha_star == out.series.gocha_star && via.gocha_chi0 == out.series.gocha_chi0 &&
                    via.euler.chi_eul_star.truncated(2) == out.series.chi_eul_star &&
                    via.euler.chi_eul_chi0.truncated(4) == out.series.chi_eul_chi0;
  if (!out.paths_agree) out.warnings.push_back("presentation route disagrees with the closed-form series");

  if (input.reference_star) {
    const auto& ref = *input.reference_star;
    bool same = static_cast<int>(ref.size()) == out.series.chi_eul_star.trunc() + 1;
    for (int n = 0; same && n <= out.series.chi_eul_star.trunc(); ++n) {
      for (int k = 0; k < 2; ++k) {
        if (out.series.chi_eul_star[n][k] != Rational(ref[n][k])) same = false;
      }
    }
    if (!same) {
      out.warnings.push_back("reference gocha* denominator differs from the computed " +
                             out.series.chi_eul_star[0].to_string() + " | " +
                             out.series.chi_eul_star[1].to_string() + " | " +
                             out.series.chi_eul_star[2].to_string());
    }
  }
  if (input.reference_chi0) {
    const auto& ref = *input.reference_chi0;
    bool same = static_cast<int>(ref.size()) == out.series.chi_eul_chi0.trunc() + 1;
    for (int n = 0; same && n <= out.series.chi_eul_chi0.trunc(); ++n) {
      if (out.series.chi_eul_chi0[n] != Rational(ref[n])) same = false;
    }
    if (!same) out.warnings.push_back("reference gocha_chi0 denominator differs from the computed one");
  }
  return out;
}

}  // namespace gocha
