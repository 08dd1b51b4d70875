#include "gocha/report.hpp"

#include <sstream>

#include "gocha/inversion.hpp"
#include "gocha/oracle.hpp"
#include "gocha/spectrum.hpp"

namespace gocha {

Json rational_json(const Rational& r) { return r.get_str(); }

Json group_ring_json(const GroupRingElt& g) {
  Json out = Json::array();
  for (const auto& c : g.coeffs()) out.push_back(c.get_str());
  return out;
}

Json character_legend(int q) {
  Json out = Json::array();
  for (int i = 0; i < q; ++i) out.push_back(i == 0 ? std::string("1") : "chi0^" + std::to_string(i));
  return out;
}

namespace {

Json series_json(const Series& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(rational_json(c));
  return out;
}

Json series_json(const EqSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(group_ring_json(c));
  return out;
}

RingMode with_prime(const ReportOptions& opt, const PresentationSpec& spec) {
  RingMode m = opt.mode;
  m.p = spec.p;
  return m;
}

Json header(const char* command, const PresentationSpec& spec, const ReportOptions& opt) {
  Json r;
  r["command"] = command;
  r["source"] = opt.source;
  r["mode"] = opt.mode.name();
  r["trunc"] = opt.trunc;
  r["chi0"] = opt.chi0;
  r["p"] = spec.p;
  r["q"] = spec.q;
  r["character_legend"] = character_legend(spec.q);
  return r;
}

Json string_list(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json relations_json(const PresentationSpec& spec, const EulerData& euler) {
  Json out = Json::array();
  for (std::size_t k = 0; k < spec.relations.size(); ++k) {
    const Relation& rel = spec.relations[k];
    const RelationDegrees& d = euler.relations.at(k);
    Json r;
    r["word"] = rel.word ? Json(rel.text) : Json(nullptr);
    r["source"] = rel.declared ? "declared" : "expansion";
    r["char"] = d.char_index;
    r["deg"] = d.deg;
    r["chi0_deg"] = d.chi0_deg;
    out.push_back(r);
  }
  return out;
}

}  // namespace

Json series_report(const PresentationSpec& spec, const ReportOptions& opt) {
  Json r = header("series", spec, opt);
  const GochaSeries g = gocha_from_presentation(spec, opt.trunc, with_prime(opt, spec), opt.chi0);
  r["relations"] = relations_json(spec, g.euler);
  Json euler;
  euler["chi_eul"] = series_json(g.euler.chi_eul);
  euler["chi_eul_star"] = series_json(g.euler.chi_eul_star);
  euler["chi_eul_chi0"] = series_json(g.euler.chi_eul_chi0);
  euler["deg"] = g.euler.deg;
  euler["deg_chi0"] = g.euler.deg_chi0;
  r["euler"] = euler;
  Json series;
  series["gocha"] = series_json(g.gocha);
  series["gocha_star"] = series_json(g.gocha_star);
  series["gocha_chi0"] = series_json(g.gocha_chi0);
  r["series"] = series;

  std::vector<std::string> warnings = spec.warnings;
  warnings.insert(warnings.end(), g.euler.warnings.begin(), g.euler.warnings.end());
  Json family = Json::array();
  for (const auto& e : validate_comm_family(spec).entries) {
    family.push_back({{"relation", e.relation}, {"pass", e.pass}, {"message", e.message}});
    if (!e.pass) warnings.push_back("not a comm-family relation: " + e.message);
  }
  r["comm_family"] = family;
  r["warnings"] = string_list(warnings);
  return r;
}

Json ranks_report(const PresentationSpec& spec, const ReportOptions& opt) {
  Json r = header("ranks", spec, opt);
  const RingMode mode = with_prime(opt, spec);
  const GochaSeries g = gocha_from_presentation(spec, opt.trunc, mode, opt.chi0);
  const int q = spec.q;
  Json scalar = Json::array();
  Json equivariant = Json::array();
  Json chi0 = Json::array();
  bool all_agree = true;

  if (!spec.generators.empty()) {
    const RankTable a = a_from_w(w_table(b_table_from_series(g.gocha, Flavor::kScalar)), mode);
    for (int n = 1; n <= opt.trunc; ++n) {
      if (!a.has_degree(n)) continue;
      const Rational via_mobius(static_cast<long>(a.get(n, 0)));
      const Rational via_necklace = necklace_ranks(g.euler.chi_eul, n, mode);
      const bool agree = via_mobius == via_necklace;
      all_agree = all_agree && agree;
      scalar.push_back({{"n", n},
                        {"mobius", rational_json(via_mobius)},
                        {"necklace", rational_json(via_necklace)},
                        {"agree", agree}});
    }

    if (q > 1) {
      const RankTable aq =
          a_from_w(w_table(b_table_from_series(g.gocha_star, Flavor::kEquivariant)), mode);
      for (int n = 1; n <= opt.trunc; ++n) {
        if (gcd(n, q) != 1) {
          equivariant.push_back({{"n", n},
                                 {"mobius", nullptr},
                                 {"necklace", nullptr},
                                 {"agree", nullptr},
                                 {"status", "oracle-only"}});
          continue;
        }
        if (!aq.has_degree(n)) continue;
        const GroupRingElt via_mobius = aq.at(n);
        const GroupRingElt via_necklace = equivariant_necklace_ranks(g.euler.chi_eul_star, n, mode);
        const bool agree = via_mobius == via_necklace;
        all_agree = all_agree && agree;
        equivariant.push_back({{"n", n},
                               {"mobius", group_ring_json(via_mobius)},
                               {"necklace", group_ring_json(via_necklace)},
                               {"agree", agree},
                               {"status", "computed"}});
      }
    }

    const Chi0Pipeline pipe = chi0_pipeline(g.gocha_chi0, mode);
    for (int n = 1; n <= opt.trunc; ++n) {
      if (!pipe.a.has_degree(n)) continue;
      const Rational via_mobius(static_cast<long>(pipe.a.get(n, 0)));
      const Rational via_necklace = necklace_ranks(g.euler.chi_eul_chi0, n, mode);
      const bool agree = via_mobius == via_necklace;
      all_agree = all_agree && agree;
      chi0.push_back({{"n", n},
                      {"b", rational_json(pipe.b.at(n))},
                      {"mobius", rational_json(via_mobius)},
                      {"necklace", rational_json(via_necklace)},
                      {"agree", agree}});
    }
  }
  r["scalar"] = scalar;
  r["equivariant"] = equivariant;
  r["chi0_filtration"] = chi0;
  r["all_agree"] = all_agree;
  r["warnings"] = string_list(spec.warnings);
  return r;
}

namespace {

Json spectrum_json(const SpectrumReport& s) {
  Json r;
  r["polynomial"] = series_json(s.polynomial);
  Json eig = Json::array();
  for (const auto& e : s.eigenvalues) {
    eig.push_back({{"re", e.value.real()},
                   {"im", e.value.imag()},
                   {"modulus", std::abs(e.value)},
                   {"radius", e.radius}});
  }
  r["eigenvalues"] = eig;
  r["disks_disjoint"] = s.disks_disjoint;
  if (s.dominant_real) {
    const auto& d = *s.dominant_real;
    r["dominant_real"] = {{"lo", rational_json(d.lo)},
                          {"hi", rational_json(d.hi)},
                          {"approx", Rational((d.lo + d.hi) / 2).get_d()},
                          {"simple", d.simple},
                          {"above_one", d.above_one}};
  } else {
    r["dominant_real"] = nullptr;
  }
  r["entropy"] = {s.entropy_lo, s.entropy_hi};
  r["dominance"] = dominance_name(s.dominance);
  r["verdict"] = verdict_name(s.verdict);
  r["reason"] = s.reason;
  Json ev = Json::array();
  for (const auto& p : s.evidence) ev.push_back({{"n", p.degree}, {"ratio", p.ratio}});
  r["evidence"] = ev;
  r["evidence_stable"] = s.evidence_stable;
  r["evidence_settled_from"] = s.evidence_settled_from ? Json(*s.evidence_settled_from) : Json(nullptr);
  return r;
}

}  // namespace

Json spectrum_report(const PresentationSpec& spec, const ReportOptions& opt) {
  Json r = header("spectrum", spec, opt);
  const RingMode mode = with_prime(opt, spec);
  if (spec.is_free()) {
    r["kind"] = "free";
    r["spectrum"] = spectrum_json(free_group_verdict(spec));
    r["warnings"] = string_list(spec.warnings);
    return r;
  }
  const GochaSeries g = gocha_from_presentation(spec, opt.trunc, mode, opt.chi0);
  const SpectrumReport s = entropy_verdict(g.euler.chi_eul_chi0, opt.tolerance);
  r["kind"] = "chi0_filtration";
  r["spectrum"] = spectrum_json(s);

  const EigencheckReport checks =
      eigencheck_conditions(b_table_from_series(g.gocha_chi0, Flavor::kChi0), spec.q);
  Json chars = Json::array();
  bool all_hold = true;
  for (const auto& c : checks.character_checks) {
    chars.push_back({{"char", c.char_index}, {"prime", c.prime}, {"holds", c.holds}});
    all_hold = all_hold && c.holds;
  }
  Json trivial = Json::array();
  for (const auto& c : checks.trivial_checks) {
    trivial.push_back({{"prime", c.prime}, {"holds", c.holds}});
    all_hold = all_hold && c.holds;
  }
  r["eigencheck"] = {{"character", chars}, {"trivial", trivial}, {"all_hold", all_hold}};
  std::vector<std::string> warnings = spec.warnings;
  warnings.insert(warnings.end(), g.euler.warnings.begin(), g.euler.warnings.end());
  r["warnings"] = string_list(warnings);
  return r;
}

namespace {

Json quotient_json(const GradedQuotient& g) {
  Json r;
  r["grading"] = grading_name(g.grading);
  r["dims"] = g.dims;
  r["char_dims"] = g.char_dims;
  r["character_homogeneous"] = g.character_homogeneous;
  return r;
}

}  // namespace

Json oracle_report(const PresentationSpec& spec, const ReportOptions& opt) {
  Json r = header("oracle", spec, opt);
  r["max_degree"] = opt.max_degree;
  const CrosscheckReport c = crosscheck(spec, opt.max_degree, with_prime(opt, spec), opt.chi0);
  r["standard"] = quotient_json(c.standard);
  r["chi0_filtration"] = quotient_json(c.filtered);
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"check", e.check},
                       {"n", e.degree},
                       {"char", e.char_index < 0 ? Json(nullptr) : Json(e.char_index)},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"match", e.match}});
  }
  r["checks"] = entries;
  r["all_match"] = c.all_match();
  const auto first = c.first_mismatch_degree();
  r["first_mismatch_degree"] = first ? Json(*first) : Json(nullptr);
  std::vector<std::string> warnings = spec.warnings;
  warnings.insert(warnings.end(), c.warnings.begin(), c.warnings.end());
  r["warnings"] = string_list(warnings);
  return r;
}

Json fab_report(const FabInput& input, const ReportOptions& opt) {
  const FabResult f = run_fab(input, opt.trunc);
  Json r;
  r["command"] = "fab";
  r["source"] = opt.source;
  r["trunc"] = opt.trunc;
  r["p"] = input.p;
  r["disc_d"] = input.d;
  r["discriminant"] = field_discriminant(input.d);
  r["q"] = 2;
  r["character_legend"] = character_legend(2);
  Json splitting = Json::array();
  for (const auto& s : f.splitting) {
    splitting.push_back({{"prime", s.prime}, {"status", split_status_name(s.status)}, {"tame", s.tame}});
  }
  r["splitting"] = splitting;
  r["inert_or_ramified"] = f.inert_count;
  r["split"] = f.split_count;
  r["linking"] = {{"primes", f.linking_primes}, {"matrix", f.linking}};
  r["euler"] = {{"chi_eul_star", series_json(f.series.chi_eul_star)},
                {"chi_eul_chi0", series_json(f.series.chi_eul_chi0)}};
  r["series"] = {{"gocha_star", series_json(f.series.gocha_star)},
                 {"gocha_chi0", series_json(f.series.gocha_chi0)}};
  Json gens = Json::array();
  for (const auto& g : f.presentation.generators) gens.push_back({{"name", g.name}, {"char", g.char_index}});
  Json rels = Json::array();
  for (const auto& rel : f.presentation.relations) {
    rels.push_back({{"char", rel.declared->char_index},
                    {"deg", rel.declared->deg},
                    {"chi0_deg", rel.declared->chi0_deg}});
  }
  r["presentation"] = {{"generators", gens}, {"relations", rels}};
  r["paths_agree"] = f.paths_agree;
  const SpectrumReport s = entropy_verdict(f.series.chi_eul_chi0, opt.tolerance);
  r["spectrum"] = spectrum_json(s);
  r["warnings"] = string_list(f.warnings);
  return r;
}

// ---------------------------------------------------------------- TSV

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + cell(v[i]);
    return out;
  }
  return v.dump();
}

void series_rows(std::ostringstream& out, const Json& series) {
  std::vector<std::string> names;
  for (auto it = series.begin(); it != series.end(); ++it) names.push_back(it.key());
  out << "degree";
  for (const auto& n : names) out << '\t' << n;
  out << '\n';
  std::size_t len = 0;
  for (const auto& n : names) len = std::max(len, series.at(n).size());
  for (std::size_t d = 0; d < len; ++d) {
    out << d;
    for (const auto& n : names) {
      const Json& s = series.at(n);
      out << '\t' << (d < s.size() ? cell(s[d]) : "-");
    }
    out << '\n';
  }
}

void warning_rows(std::ostringstream& out, const Json& r) {
  if (!r.contains("warnings")) return;
  for (const auto& w : r.at("warnings")) out << "warning\t" << w.get<std::string>() << '\n';
}

}  // namespace

std::string report_to_tsv(const Json& r) {
  std::ostringstream out;
  const std::string command = r.at("command").get<std::string>();
  if (command == "series") {
    series_rows(out, r.at("series"));
  } else if (command == "ranks") {
    out << "table\tdegree\tmobius\tnecklace\tagree\n";
    for (const char* table : {"scalar", "equivariant", "chi0_filtration"}) {
      for (const auto& row : r.at(table)) {
        out << table << '\t' << row.at("n").dump() << '\t' << cell(row.at("mobius")) << '\t'
            << cell(row.at("necklace")) << '\t' << row.at("agree").dump() << '\n';
      }
    }
  } else if (command == "spectrum" || command == "fab") {
    if (command == "fab") {
      out << "prime\tstatus\ttame\n";
      for (const auto& s : r.at("splitting")) {
        out << s.at("prime").dump() << '\t' << cell(s.at("status")) << '\t' << s.at("tame").dump()
            << '\n';
      }
      series_rows(out, r.at("series"));
    }
    const Json& s = r.at("spectrum");
    out << "verdict\t" << cell(s.at("verdict")) << '\n';
    out << "dominance\t" << cell(s.at("dominance")) << '\n';
    out << "entropy\t" << cell(s.at("entropy")) << '\n';
    out << "re\tim\tradius\n";
    for (const auto& e : s.at("eigenvalues")) {
      out << e.at("re").dump() << '\t' << e.at("im").dump() << '\t' << e.at("radius").dump() << '\n';
    }
  } else if (command == "oracle") {
    out << "check\tdegree\tchar\texpected\tactual\tmatch\n";
    for (const auto& e : r.at("checks")) {
      out << cell(e.at("check")) << '\t' << e.at("n").dump() << '\t' << cell(e.at("char")) << '\t'
          << cell(e.at("expected")) << '\t' << cell(e.at("actual")) << '\t' << e.at("match").dump()
          << '\n';
    }
  }
  warning_rows(out, r);
  return out.str();
}

}  // namespace gocha
