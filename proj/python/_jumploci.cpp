// Python bindings.  Reports cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jumploci/bundle.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/jacobian.hpp"
#include "jumploci/parse.hpp"
#include "jumploci/report.hpp"
#include "jumploci/syzygy.hpp"

namespace py = pybind11;
using namespace jumploci;
using nlohmann::json;

namespace {

std::string analyze_json(const std::string& poly, const std::string& field, int degreeBound, std::optional<std::string> syzygy,
                         std::optional<std::string> comboT, bool withLoci, bool withBourbaki, std::uint64_t seed) {
  AnalyzeOptions opts;
  opts.field = field;
  opts.degreeBound = degreeBound;
  opts.syzygy = std::move(syzygy);
  opts.comboT = std::move(comboT);
  opts.withLoci = withLoci;
  opts.withBourbaki = withBourbaki;
  opts.seed = seed;
  AnalysisReport rep;
  {
    py::gil_scoped_release release;
    rep = analyze(poly, opts);
  }
  return json(rep).dump();
}

std::string splitting_json(const std::string& poly, const std::string& line, const std::string& field) {
  const NumberField* K = field_from_text(field);
  Poly f = parse_poly(poly, K);
  validate_curve(f);
  JacobianData jd(f);
  Point L = canonical_line(parse_point(line, K));
  const int r = mdr(jd);
  SplittingType s = splitting_along_line(jd, r, L);
  SplittingType g = generic_splitting(jd.degree(), r);
  json j{{"schemaVersion", kSchemaVersion}, {"line", point_to_string(L)},          {"splitting", {s.d1, s.d2}},
         {"generic", {g.d1, g.d2}},         {"jumpingOrder", jumping_order(jd, r, L)}};
  return j.dump();
}

std::string corpus_json(const std::string& name) {
  CorpusResult res = run_corpus_entry(name);
  json j{{"schemaVersion", kSchemaVersion}, {"name", name}, {"poly", res.entry.poly}, {"pass", res.pass()}, {"checks", res.checks}, {"seconds", res.seconds}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_jumploci, m) {
  m.doc() = "Jumping lines and Bourbaki ideals of plane curves (native part)";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("__version__") = kToolVersion;

  static py::exception<ParseError> parseErr(m, "ParseError", PyExc_ValueError);
  static py::exception<MathError> mathErr(m, "MathError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parseErr, e.what());
    } catch (const MathError& e) {
      py::object err = py::reinterpret_borrow<py::object>(mathErr.ptr())(e.what());
      err.attr("code") = error_code_name(e.code());
      PyErr_SetObject(mathErr.ptr(), err.ptr());
    }
  });

  m.def("analyze_json", &analyze_json, py::arg("poly"), py::arg("field") = "", py::arg("degree_bound") = -1, py::arg("syzygy") = py::none(),
        py::arg("combo_t") = py::none(), py::arg("loci") = true, py::arg("bourbaki") = true, py::arg("seed") = AnalyzeOptions{}.seed);
  m.def("splitting_json", &splitting_json, py::arg("poly"), py::arg("line"), py::arg("field") = "");
  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (auto& e : corpus_entries()) names.push_back(e.name);
    return names;
  });
  m.def("corpus_json", &corpus_json, py::arg("name"));
  m.def("canonical", [](const std::string& poly, const std::string& field) { return parse_poly(poly, field_from_text(field)).normalized().to_string(); },
        py::arg("poly"), py::arg("field") = "");
}
