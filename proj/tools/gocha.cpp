// gocha: series, ranks, spectra and oracle cross-checks for presentations
// with a cyclic action.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gocha/arithmetic.hpp"
#include "gocha/errors.hpp"
#include "gocha/presentation.hpp"
#include "gocha/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gocha::ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant gocha series and eigenspace ranks"};
  app.require_subcommand(1);
  app.fallthrough();

  int trunc = 12;
  std::string mode = "zp";
  int chi0 = 1;
  std::string format = "json";
  double tolerance = 1e-9;
  int max_degree = 5;
  std::string file;

  app.add_option("--trunc", trunc, "Truncation degree")->check(CLI::Range(0, 4096));
  app.add_option("--mode", mode, "Coefficient ring: fp or zp")->check(CLI::IsMember({"fp", "zp"}));
  app.add_option("--chi0", chi0, "Exponent i of the character used as chi0")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--tolerance", tolerance, "Modulus gap for dominance (spectrum only)")
      ->check(CLI::NonNegativeNumber);

  auto* series = app.add_subcommand("series", "gocha, gocha* and gocha_chi0 expansions");
  auto* ranks = app.add_subcommand("ranks", "Lie algebra ranks by two independent routes");
  auto* spectrum = app.add_subcommand("spectrum", "chi0-eigenvalues and the eigenspace verdict");
  auto* oracle = app.add_subcommand("oracle", "brute-force quotient cross-check");
  auto* fab = app.add_subcommand("fab", "quadratic-field examples from splitting data");
  for (auto* sub : {series, ranks, spectrum, oracle}) {
    sub->add_option("presentation", file, "Presentation JSON file")->required();
  }
  fab->add_option("input", file, "Arithmetic input JSON file")->required();
  oracle->add_option("--max-degree", max_degree, "Largest degree for the oracle")
      ->check(CLI::Range(0, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(gocha::ExitCode::kValidation);
  }

  try {
    gocha::ReportOptions opt;
    opt.trunc = trunc;
    opt.mode = mode == "fp" ? gocha::RingMode::fp(0) : gocha::RingMode::zp();
    opt.chi0 = chi0;
    opt.tolerance = tolerance;
    opt.max_degree = max_degree;
    opt.source = file;

    gocha::Json report;
    if (fab->parsed()) {
      report = gocha::fab_report(gocha::parse_fab_input(read_file(file)), opt);
    } else {
      const gocha::PresentationSpec spec = gocha::parse_presentation(read_file(file));
      if (spec.q > 1 && gocha::gcd(chi0, spec.q) != 1) {
        throw gocha::DomainError("--chi0 must be prime to q = " + std::to_string(spec.q));
      }
      if (series->parsed()) report = gocha::series_report(spec, opt);
      if (ranks->parsed()) report = gocha::ranks_report(spec, opt);
      if (spectrum->parsed()) report = gocha::spectrum_report(spec, opt);
      if (oracle->parsed()) report = gocha::oracle_report(spec, opt);
    }
    if (format == "tsv") {
      std::cout << gocha::report_to_tsv(report);
    } else {
      std::cout << report.dump(2) << '\n';
    }
    return 0;
  } catch (const gocha::ResourceError& e) {
    std::cerr << "error: " << e.what() << " (completed through degree " << e.completed_degree()
              << ")\n";
    return static_cast<int>(e.exit_code());
  } catch (const gocha::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
