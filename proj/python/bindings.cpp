// Python access to the report builders. Reports cross the boundary as JSON
// text so the module stays a thin layer over the command line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gocha/arithmetic.hpp"
#include "gocha/errors.hpp"
#include "gocha/inversion.hpp"
#include "gocha/oracle.hpp"
#include "gocha/presentation.hpp"
#include "gocha/report.hpp"

namespace py = pybind11;

namespace {

gocha::ReportOptions make_options(int trunc, const std::string& mode, int chi0, double tolerance,
                                  int max_degree) {
  if (mode != "fp" && mode != "zp") throw gocha::UsageError("mode must be fp or zp");
  gocha::ReportOptions opt;
  opt.trunc = trunc;
  opt.mode = mode == "fp" ? gocha::RingMode::fp(0) : gocha::RingMode::zp();
  opt.chi0 = chi0;
  opt.tolerance = tolerance;
  opt.max_degree = max_degree;
  opt.source = "<python>";
  return opt;
}

using Builder = gocha::Json (*)(const gocha::PresentationSpec&, const gocha::ReportOptions&);

std::string run(Builder build, const std::string& text, int trunc, const std::string& mode,
                int chi0, double tolerance, int max_degree) {
  const gocha::PresentationSpec spec = gocha::parse_presentation(text);
  if (spec.q > 1 && gocha::gcd(chi0, spec.q) != 1) {
    throw gocha::DomainError("chi0 must be prime to q = " + std::to_string(spec.q));
  }
  return build(spec, make_options(trunc, mode, chi0, tolerance, max_degree)).dump(2);
}

void def_report(py::module_& m, const char* name, Builder build, const char* doc) {
  m.def(
      name,
      [build](const std::string& text, int trunc, const std::string& mode, int chi0,
              double tolerance, int max_degree) {
        return run(build, text, trunc, mode, chi0, tolerance, max_degree);
      },
      py::arg("presentation"), py::kw_only(), py::arg("trunc") = 12, py::arg("mode") = "zp",
      py::arg("chi0") = 1, py::arg("tolerance") = 1e-9, py::arg("max_degree") = 5, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equivariant gocha series and eigenspace ranks";

  static py::handle error_type =
      py::exception<gocha::Error>(m, "GochaError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gocha::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("exit_code") = static_cast<int>(e.exit_code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  def_report(m, "series", gocha::series_report, "gocha, gocha* and gocha_chi0 as JSON text");
  def_report(m, "ranks", gocha::ranks_report, "Lie algebra ranks by two routes as JSON text");
  def_report(m, "spectrum", gocha::spectrum_report, "chi0-eigenvalue verdict as JSON text");
  def_report(m, "oracle", gocha::oracle_report, "brute-force cross-check as JSON text");

  m.def(
      "fab",
      [](const std::string& text, int trunc, const std::string& mode) {
        return gocha::fab_report(gocha::parse_fab_input(text), make_options(trunc, mode, 1, 1e-9, 5))
            .dump(2);
      },
      py::arg("input"), py::kw_only(), py::arg("trunc") = 12, py::arg("mode") = "zp",
      "quadratic-field report as JSON text");

  m.def("mobius", &gocha::mobius, py::arg("n"));
  m.def("lyndon_counts", &gocha::lyndon_counts, py::arg("generator_chars"), py::arg("q"),
        py::arg("max_length"), "Lyndon word counts keyed by (length, character)");
  m.def(
      "kronecker_split",
      [](std::int64_t d, std::int64_t prime) {
        return gocha::split_status_name(gocha::kronecker_split(d, prime));
      },
      py::arg("d"), py::arg("prime"), "split, inert or ramified in Q(sqrt(-d))");
}
