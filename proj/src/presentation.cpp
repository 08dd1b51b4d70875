#include "gocha/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "gocha/errors.hpp"

namespace gocha {

// ---------------------------------------------------------------- words

CommWord CommWord::gen(int index) {
  CommWord w;
  w.kind = Kind::kGenerator;
  w.generator = index;
  return w;
}

CommWord CommWord::commutator(CommWord a, CommWord b) {
  CommWord w;
  w.kind = Kind::kCommutator;
  w.args = {std::move(a), std::move(b)};
  return w;
}

CommWord CommWord::power(CommWord base, long exponent) {
  CommWord w;
  w.kind = Kind::kPower;
  w.exponent = exponent;
  w.args = {std::move(base)};
  return w;
}

CommWord CommWord::product(CommWord a, CommWord b) {
  CommWord w;
  w.kind = Kind::kProduct;
  w.args = {std::move(a), std::move(b)};
  return w;
}

int CommWord::nominal_length() const {
  if (kind == Kind::kGenerator) return 1;
  int n = 0;
  for (const auto& a : args) n += a.nominal_length();
  return n;
}

std::string CommWord::to_string(const std::vector<std::string>& names) const {
  switch (kind) {
    case Kind::kGenerator:
      return names.at(generator);
    case Kind::kCommutator:
      return "[" + args[0].to_string(names) + "," + args[1].to_string(names) + "]";
    case Kind::kPower: {
      const std::string base = args[0].to_string(names);
      const bool wrap = args[0].kind == Kind::kProduct || args[0].kind == Kind::kPower;
      return (wrap ? "(" + base + ")" : base) + "^" + std::to_string(exponent);
    }
    case Kind::kProduct:
      return args[0].to_string(names) + "*" + args[1].to_string(names);
  }
  return {};
}

namespace {

// Recursive descent over
//   product := power ('*' power)*
//   power   := atom ('^' int)*
//   atom    := name | '[' product ',' product ']' | '(' product ')'
class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<Generator>& generators)
      : text_(text), generators_(generators) {}

  CommWord parse() {
    CommWord w = product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad word \"" + text_ + "\": " + what, static_cast<long>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  CommWord product() {
    CommWord w = power();
    while (accept('*')) w = CommWord::product(std::move(w), power());
    return w;
  }

  CommWord power() {
    CommWord w = atom();
    while (accept('^')) w = CommWord::power(std::move(w), integer());
    return w;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("exponent out of range");
    }
  }

  CommWord atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of word");
    if (accept('[')) {
      CommWord a = product();
      expect(',');
      CommWord b = product();
      expect(']');
      return CommWord::commutator(std::move(a), std::move(b));
    }
    if (accept('(')) {
      CommWord w = product();
      expect(')');
      return w;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a generator name");
    const std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) return CommWord::gen(static_cast<int>(i));
    }
    pos_ = start;
    fail("unknown generator '" + name + "'");
  }

  const std::string& text_;
  const std::vector<Generator>& generators_;
  std::size_t pos_ = 0;
};

}  // namespace

CommWord parse_word(const std::string& text, const std::vector<Generator>& generators) {
  return WordParser(text, generators).parse();
}

// ---------------------------------------------------------- documents

std::vector<std::string> PresentationSpec::generator_names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

int PresentationSpec::generators_with_char(int index) const {
  return static_cast<int>(std::count_if(generators.begin(), generators.end(),
                                        [&](const Generator& g) { return g.char_index == index; }));
}

namespace {

using nlohmann::json;

int require_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
  const auto value = v.get<long long>();
  if (value < INT32_MIN || value > INT32_MAX) {
    throw ParseError(where + ": \"" + key + "\" out of range");
  }
  return static_cast<int>(value);
}

int char_in_range(int value, int q, const std::string& where) {
  if (value < 0 || value >= q) {
    throw ParseError(where + ": char " + std::to_string(value) + " outside [0, " +
                     std::to_string(q - 1) + "]");
  }
  return value;
}

}  // namespace

PresentationSpec parse_presentation(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("presentation is not valid JSON: ") + e.what(),
                     static_cast<long>(e.byte) - 1);
  }
  if (!doc.is_object()) throw ParseError("presentation must be a JSON object");

  PresentationSpec spec;
  spec.p = require_int(doc, "p", "presentation");
  spec.q = require_int(doc, "q", "presentation");
  if (!is_prime(spec.p)) throw ParseError("p = " + std::to_string(spec.p) + " is not prime");
  if (spec.q < 1) throw ParseError("q must be positive");
  if (spec.q > 2 && (spec.p - 1) % spec.q != 0) {
    spec.warnings.push_back("q = " + std::to_string(spec.q) + " does not divide p - 1 = " +
                            std::to_string(spec.p - 1));
  }

  const json gens = doc.value("generators", json::array());
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generator " + std::to_string(i);
    const json& g = gens[i];
    if (!g.is_object() || !g.contains("name") || !g.at("name").is_string()) {
      throw ParseError(where + ": needs a string \"name\"");
    }
    Generator gen;
    gen.name = g.at("name").get<std::string>();
    if (gen.name.empty()) throw ParseError(where + ": empty name");
    for (char c : gen.name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError(where + ": name \"" + gen.name + "\" must be alphanumeric");
      }
    }
    if (!seen.insert(gen.name).second) throw ParseError("duplicate generator name \"" + gen.name + "\"");
    gen.char_index = char_in_range(require_int(g, "char", where), spec.q, where);
    spec.generators.push_back(gen);
  }

  const json rels = doc.value("relations", json::array());
  if (!rels.is_array()) throw ParseError("\"relations\" must be an array");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string where = "relation " + std::to_string(i);
    const json& r = rels[i];
    if (!r.is_object()) throw ParseError(where + ": must be an object");
    Relation rel;
    if (r.contains("word")) {
      if (!r.at("word").is_string()) throw ParseError(where + ": \"word\" must be a string");
      rel.text = r.at("word").get<std::string>();
      rel.word = parse_word(rel.text, spec.generators);
    }
    const bool has_any = r.contains("char") || r.contains("deg") || r.contains("chi0_deg");
    if (has_any) {
      RelationDegrees d;
      d.char_index = char_in_range(require_int(r, "char", where), spec.q, where);
      d.deg = require_int(r, "deg", where);
      d.chi0_deg = require_int(r, "chi0_deg", where);
      if (d.deg < 2) throw ParseError(where + ": deg must be at least 2");
      if (d.chi0_deg < 1) throw ParseError(where + ": chi0_deg must be positive");
      rel.declared = d;
    }
    if (!rel.word && !rel.declared) {
      throw ParseError(where + ": needs \"word\" or \"char\"/\"deg\"/\"chi0_deg\"");
    }
    spec.relations.push_back(std::move(rel));
  }

  if (doc.contains("meta")) {
    const json& meta = doc.at("meta");
    if (!meta.is_object()) throw ParseError("\"meta\" must be an object");
    if (meta.contains("mild")) {
      if (!meta.at("mild").is_boolean()) throw ParseError("meta.mild must be a boolean");
      spec.mild = meta.at("mild").get<bool>();
    }
    if (meta.contains("torsion_free_zp")) {
      if (!meta.at("torsion_free_zp").is_boolean()) {
        throw ParseError("meta.torsion_free_zp must be a boolean");
      }
      spec.torsion_free_zp = meta.at("torsion_free_zp").get<bool>();
    }
  }
  if (!spec.mild) spec.warnings.push_back("presentation is not declared mild");
  return spec;
}

// ----------------------------------------------------------- Magnus

NCPoly::NCPoly(int trunc, std::vector<int> weights, long modulus)
    : trunc_(trunc), weights_(std::move(weights)), modulus_(modulus) {
  if (trunc < 0) throw UsageError("truncation must be nonnegative");
}

NCPoly NCPoly::one(int trunc, std::vector<int> weights, long modulus) {
  NCPoly out(trunc, std::move(weights), modulus);
  out.add_term({}, 1);
  return out;
}

NCPoly NCPoly::generator(int index, int trunc, std::vector<int> weights, long modulus) {
  NCPoly out(trunc, std::move(weights), modulus);
  out.add_term({index}, 1);
  return out;
}

int NCPoly::word_weight(const Word& w) const {
  int total = 0;
  for (int letter : w) total += weights_.at(letter);
  return total;
}

void NCPoly::reduce(Integer& c) const {
  if (modulus_ == 0) return;
  c %= modulus_;
  if (c < 0) c += modulus_;
}

void NCPoly::add_term(const Word& w, const Integer& c) {
  if (word_weight(w) > trunc_) return;
  Integer value = c;
  auto it = terms_.find(w);
  if (it != terms_.end()) value += it->second;
  reduce(value);
  if (value == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it != terms_.end()) {
    it->second = value;
  } else {
    terms_.emplace(w, value);
  }
}

int NCPoly::min_degree() const {
  int best = -1;
  for (const auto& [w, c] : terms_) {
    const int d = static_cast<int>(w.size());
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int NCPoly::min_weight() const {
  int best = -1;
  for (const auto& [w, c] : terms_) {
    const int d = word_weight(w);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Integer& s) {
  std::map<Word, Integer> old;
  old.swap(terms_);
  for (const auto& [w, c] : old) add_term(w, c * s);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out(std::min(a.trunc_, b.trunc_), a.weights_, a.modulus_);
  for (const auto& [wa, ca] : a.terms_) {
    const int weight_a = a.word_weight(wa);
    for (const auto& [wb, cb] : b.terms_) {
      if (weight_a + b.word_weight(wb) > out.trunc_) continue;
      NCPoly::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

namespace {

Integer binomial(long e, long k) {
  // Generalized C(e, k) = e (e-1) ... (e-k+1) / k!, exact at every step.
  Integer num = 1;
  for (long j = 0; j < k; ++j) num = num * Integer(e - j) / Integer(j + 1);
  return num;
}

// (1 + x)^e - 1 for x without constant term.
NCPoly power_minus_one(const NCPoly& x, long e) {
  NCPoly acc(x.trunc(), x.weights(), x.modulus());
  if (x.is_zero() || e == 0) return acc;
  const int order = std::max(1, x.min_weight());
  NCPoly term = x;
  for (long k = 1; k * order <= x.trunc() && !term.is_zero(); ++k) {
    if (e >= 0 && k > e) break;
    NCPoly scaled = term;
    scaled *= binomial(e, k);
    acc += scaled;
    term = term * x;
  }
  return acc;
}

// Expansion of phi(w) - 1.
NCPoly expand(const CommWord& w, int trunc, long modulus, const std::vector<int>& weights) {
  switch (w.kind) {
    case CommWord::Kind::kGenerator:
      if (w.generator < 0 || w.generator >= static_cast<int>(weights.size())) {
        throw UsageError("word uses an undeclared generator");
      }
      return NCPoly::generator(w.generator, trunc, weights, modulus);
    case CommWord::Kind::kPower:
      return power_minus_one(expand(w.args[0], trunc, modulus, weights), w.exponent);
    case CommWord::Kind::kProduct: {
      // (1+a)(1+b) - 1 = a + b + ab.
      const NCPoly a = expand(w.args[0], trunc, modulus, weights);
      const NCPoly b = expand(w.args[1], trunc, modulus, weights);
      return a + b + a * b;
    }
    case CommWord::Kind::kCommutator: {
      const NCPoly a = expand(w.args[0], trunc, modulus, weights);
      const NCPoly b = expand(w.args[1], trunc, modulus, weights);
      const NCPoly one = NCPoly::one(trunc, weights, modulus);
      const NCPoly a_inv = one + power_minus_one(a, -1);
      const NCPoly b_inv = one + power_minus_one(b, -1);
      return a_inv * b_inv * (one + a) * (one + b) - one;
    }
  }
  return NCPoly(trunc, weights, modulus);
}

}  // namespace

NCPoly magnus_expand(const CommWord& word, int trunc, const RingMode& mode,
                     const std::vector<int>& weights) {
  if (trunc < 1) throw UsageError("Magnus truncation must be at least 1");
  for (int w : weights) {
    if (w < 1) throw UsageError("generator weights must be positive");
  }
  long modulus = 0;
  if (mode.is_fp()) {
    if (mode.p < 2) throw UsageError("Fp-mode needs the prime p");
    modulus = mode.p;
  }
  return expand(word, trunc, modulus, weights);
}

NCPoly magnus_expand(const CommWord& word, int num_generators, int trunc, const RingMode& mode) {
  return magnus_expand(word, trunc, mode, std::vector<int>(num_generators, 1));
}

// ------------------------------------------------------ relation data

namespace {

int word_char(const NCPoly::Word& w, const PresentationSpec& spec) {
  long total = 0;
  for (int letter : w) total += spec.generators[letter].char_index;
  return static_cast<int>(floor_mod(total, spec.q));
}

std::vector<int> chi0_weights(const PresentationSpec& spec, int chi0_exponent) {
  std::vector<int> out;
  out.reserve(spec.generators.size());
  for (const auto& g : spec.generators) out.push_back(char_weight(g.char_index, spec.q, chi0_exponent));
  return out;
}

constexpr int kMaxMagnusTrunc = 16;

RelationDegrees degrees_from_word(const CommWord& word, const std::string& text,
                                  const PresentationSpec& spec, const RingMode& mode,
                                  int chi0_exponent) {
  const std::vector<int> weights = chi0_weights(spec, chi0_exponent);
  const std::vector<int> unit(spec.generators.size(), 1);
  int trunc = 2 + word.nominal_length();
  while (true) {
    const NCPoly standard = magnus_expand(word, trunc, mode, unit);
    if (!standard.is_zero()) {
      const NCPoly filtered = magnus_expand(word, trunc, mode, weights);
      if (!filtered.is_zero()) {
        RelationDegrees out;
        out.deg = standard.min_degree();
        out.chi0_deg = filtered.min_weight();
        std::set<int> chars;
        for (const auto& [w, c] : standard.terms()) {
          if (static_cast<int>(w.size()) == out.deg) chars.insert(word_char(w, spec));
        }
        if (chars.size() != 1) {
          throw HeterogeneityError("relation \"" + text + "\" has a leading form mixing " +
                                   std::to_string(chars.size()) + " characters");
        }
        out.char_index = *chars.begin();
        return out;
      }
    }
    if (trunc >= kMaxMagnusTrunc) break;
    trunc = std::min(2 * trunc, kMaxMagnusTrunc);
  }
  throw InconclusiveError("relation \"" + text + "\" expands to 0 up to degree " +
                          std::to_string(trunc));
}

}  // namespace

RelationDegrees relation_degrees(const Relation& rel, const PresentationSpec& spec,
                                 const RingMode& mode, int chi0_exponent) {
  if (rel.declared) return *rel.declared;
  if (!rel.word) throw UsageError("relation has neither a word nor degree data");
  return degrees_from_word(*rel.word, rel.text, spec, mode, chi0_exponent);
}

EulerData euler_polys(const PresentationSpec& spec, const RingMode& mode, int chi0_exponent) {
  if (spec.q > 1 && gcd(chi0_exponent, spec.q) != 1) {
    throw DomainError("chi0 exponent must be prime to q");
  }
  EulerData out;
  for (const auto& rel : spec.relations) {
    RelationDegrees d = relation_degrees(rel, spec, mode, chi0_exponent);
    if (rel.declared && rel.word) {
      try {
        const RelationDegrees from_word =
            degrees_from_word(*rel.word, rel.text, spec, mode, chi0_exponent);
        if (!(from_word == d)) {
          out.warnings.push_back("relation \"" + rel.text +
                                 "\": declared degree data differs from its expansion");
        }
      } catch (const Error& e) {
        out.warnings.push_back("relation \"" + rel.text + "\": " + e.what());
      }
    }
    out.relations.push_back(d);
  }

  int top = 1;
  int top_chi0 = 1;
  for (const auto& d : out.relations) {
    top = std::max(top, d.deg);
    top_chi0 = std::max(top_chi0, d.chi0_deg);
  }
  for (const auto& g : spec.generators) {
    top_chi0 = std::max(top_chi0, char_weight(g.char_index, spec.q, chi0_exponent));
  }

  const int q = spec.q;
  Series chi_eul(top, Rational(0));
  EqSeries star(top, GroupRingElt(q));
  Series chi0(top_chi0, Rational(0));
  chi_eul[0] = 1;
  star[0] = GroupRingElt::one(q);
  chi0[0] = 1;
  for (const auto& g : spec.generators) {
    chi_eul[1] -= 1;
    star[1] -= GroupRingElt::basis(q, g.char_index);
    chi0[char_weight(g.char_index, q, chi0_exponent)] -= 1;
  }
  for (const auto& d : out.relations) {
    chi_eul[d.deg] += 1;
    star[d.deg] += GroupRingElt::basis(q, d.char_index);
    chi0[d.chi0_deg] += 1;
  }
  out.deg = std::max(0, chi_eul.degree());
  out.deg_chi0 = std::max(0, chi0.degree());
  out.chi_eul = chi_eul.truncated(out.deg);
  out.chi_eul_star = star.truncated(std::max(0, star.degree()));
  out.chi_eul_chi0 = chi0.truncated(out.deg_chi0);
  return out;
}

namespace {

void require_nonnegative(const Series& s, const char* name) {
  for (int n = 0; n <= s.trunc(); ++n) {
    if (sgn(s[n]) < 0) {
      throw NonMildEvidenceError(std::string(name) + " has a negative coefficient at degree " +
                                 std::to_string(n) + ": " + s[n].get_str());
    }
  }
}

void require_nonnegative(const EqSeries& s, const char* name) {
  for (int n = 0; n <= s.trunc(); ++n) {
    for (int i = 0; i < s[n].q(); ++i) {
      if (sgn(s[n][i]) < 0) {
        throw NonMildEvidenceError(std::string(name) + " has a negative coefficient at degree " +
                                   std::to_string(n) + ", character " + std::to_string(i) +
                                   ": " + s[n][i].get_str());
      }
    }
  }
}

}  // namespace

GochaSeries gocha_from_presentation(const PresentationSpec& spec, int trunc, const RingMode& mode,
                                    int chi0_exponent) {
  if (trunc < 0) throw UsageError("truncation must be nonnegative");
  GochaSeries out;
  out.euler = euler_polys(spec, mode, chi0_exponent);
  out.gocha = ser_inv(out.euler.chi_eul.truncated(trunc));
  out.gocha_star = ser_inv(out.euler.chi_eul_star.truncated(trunc));
  out.gocha_chi0 = ser_inv(out.euler.chi_eul_chi0.truncated(trunc));
  require_nonnegative(out.gocha, "gocha");
  require_nonnegative(out.gocha_star, "gocha*");
  require_nonnegative(out.gocha_chi0, "gocha_chi0");
  return out;
}

// -------------------------------------------------------- comm family

bool CommFamilyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

namespace {

// True when w is a product of integer powers of commutators.
bool is_commutator_product(const CommWord& w) {
  switch (w.kind) {
    case CommWord::Kind::kGenerator:
      return false;
    case CommWord::Kind::kCommutator:
      return true;
    case CommWord::Kind::kPower:
      return is_commutator_product(w.args[0]);
    case CommWord::Kind::kProduct:
      return is_commutator_product(w.args[0]) && is_commutator_product(w.args[1]);
  }
  return false;
}

}  // namespace

CommFamilyReport validate_comm_family(const PresentationSpec& spec) {
  CommFamilyReport report;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const Relation& rel = spec.relations[i];
    if (!rel.word) continue;
    CommFamilyReport::Entry e;
    e.relation = static_cast<int>(i);
    e.pass = is_commutator_product(*rel.word);
    e.message = e.pass ? "product of commutator powers"
                       : "\"" + rel.text + "\" has a generator outside every commutator";
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace gocha
