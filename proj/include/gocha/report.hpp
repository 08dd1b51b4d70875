#pragma once

// Report documents behind the command line tool. JSON keys keep insertion
// order so identical inputs give byte-identical output.

#include <string>

#include <json.hpp>

#include "gocha/arithmetic.hpp"
#include "gocha/group_ring.hpp"
#include "gocha/presentation.hpp"

namespace gocha {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  int trunc = 12;
  RingMode mode = RingMode::zp();
  int chi0 = 1;
  double tolerance = 1e-9;
  int max_degree = 5;
  std::string source;  // input file name, echoed back
};

Json series_report(const PresentationSpec& spec, const ReportOptions& opt);
Json ranks_report(const PresentationSpec& spec, const ReportOptions& opt);
Json spectrum_report(const PresentationSpec& spec, const ReportOptions& opt);
Json oracle_report(const PresentationSpec& spec, const ReportOptions& opt);
Json fab_report(const FabInput& input, const ReportOptions& opt);

// Degree-major TSV rendering of any of the reports above.
std::string report_to_tsv(const Json& report);

// Lossless encodings: "num/den" strings and dense per-character arrays.
Json rational_json(const Rational& r);
Json group_ring_json(const GroupRingElt& g);
Json character_legend(int q);

}  // namespace gocha
