#pragma once

// Presentations with a diagonal action of Z/qZ on the generators, Magnus
// expansion of relation words, and the Euler characteristic polynomials
// whose inverses are the gocha series of a group with cd <= 2.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gocha/group_ring.hpp"
#include "gocha/rational.hpp"
#include "gocha/series.hpp"

namespace gocha {

// Word in the generators: name | [w, w] | w^e | w * w.
// Commutators follow [a, b] = a^-1 b^-1 a b.
struct CommWord {
  enum class Kind { kGenerator, kCommutator, kPower, kProduct };

  Kind kind = Kind::kGenerator;
  int generator = -1;  // kGenerator only
  long exponent = 1;   // kPower only
  std::vector<CommWord> args;

  static CommWord gen(int index);
  static CommWord commutator(CommWord a, CommWord b);
  static CommWord power(CommWord base, long exponent);
  static CommWord product(CommWord a, CommWord b);

  // Number of generator leaves.
  int nominal_length() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct Generator {
  std::string name;
  int char_index = 0;
};

// Character, degree and chi0-degree of a relation's leading terms.
struct RelationDegrees {
  int char_index = 0;
  int deg = 0;
  int chi0_deg = 0;

  friend bool operator==(const RelationDegrees& a, const RelationDegrees& b) {
    return a.char_index == b.char_index && a.deg == b.deg && a.chi0_deg == b.chi0_deg;
  }
};

// A relation is a word, explicit degree data, or both (declared data then
// overrides what the word expands to, which is reported as a warning).
struct Relation {
  std::optional<CommWord> word;
  std::string text;
  std::optional<RelationDegrees> declared;
};

struct PresentationSpec {
  int p = 0;
  int q = 1;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  bool mild = true;
  bool torsion_free_zp = true;
  std::vector<std::string> warnings;

  std::vector<std::string> generator_names() const;
  // Number of generators carrying character chi0^index.
  int generators_with_char(int index) const;
  bool is_free() const { return relations.empty(); }
};

// Parses the JSON presentation document; throws ParseError on bad input.
PresentationSpec parse_presentation(const std::string& json_text);
// Parses a word over the given generators.
CommWord parse_word(const std::string& text, const std::vector<Generator>& generators);

// Truncated noncommutative polynomial over Z (modulus 0) or Z/pZ. Each
// generator has a weight; words of total weight above `trunc` are dropped.
class NCPoly {
 public:
  using Word = std::vector<int>;

  NCPoly(int trunc, std::vector<int> weights, long modulus);

  static NCPoly one(int trunc, std::vector<int> weights, long modulus);
  static NCPoly generator(int index, int trunc, std::vector<int> weights, long modulus);

  int trunc() const { return trunc_; }
  long modulus() const { return modulus_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int word_weight(const Word& w) const;

  void add_term(const Word& w, const Integer& c);
  // Smallest word length (resp. weight) with a nonzero coefficient; -1 when zero.
  int min_degree() const;
  int min_weight() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Integer& s);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

 private:
  void reduce(Integer& c) const;

  int trunc_;
  std::vector<int> weights_;
  long modulus_;
  std::map<Word, Integer> terms_;
};

// phi(w) - 1 under x_j -> 1 + X_j, truncated at total weight N. Zp-mode keeps
// exact integers; Fp-mode reduces mod p.
NCPoly magnus_expand(const CommWord& word, int trunc, const RingMode& mode,
                     const std::vector<int>& weights);
// Standard grading: every generator has weight 1.
NCPoly magnus_expand(const CommWord& word, int num_generators, int trunc, const RingMode& mode);

RelationDegrees relation_degrees(const Relation& rel, const PresentationSpec& spec,
                                 const RingMode& mode, int chi0_exponent = 1);

struct EulerData {
  Series chi_eul;
  EqSeries chi_eul_star;
  Series chi_eul_chi0;
  int deg = 0;       // degree of chi_eul
  int deg_chi0 = 0;  // degree of chi_eul_chi0
  std::vector<RelationDegrees> relations;
  std::vector<std::string> warnings;
};

EulerData euler_polys(const PresentationSpec& spec, const RingMode& mode, int chi0_exponent = 1);

struct GochaSeries {
  Series gocha;
  EqSeries gocha_star;
  Series gocha_chi0;
  EulerData euler;
};

// Inverse Euler polynomials to degree `trunc`; throws NonMildEvidenceError
// on any negative coefficient.
GochaSeries gocha_from_presentation(const PresentationSpec& spec, int trunc, const RingMode& mode,
                                    int chi0_exponent = 1);

struct CommFamilyReport {
  struct Entry {
    int relation = 0;
    bool pass = true;
    std::string message;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

// Syntactic check that every word relation is a product of powers of
// commutators. Explicit-degree relations are skipped.
CommFamilyReport validate_comm_family(const PresentationSpec& spec);

}  // namespace gocha
