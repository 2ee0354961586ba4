#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "invcurve/corpus.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/plot.hpp"

namespace py = pybind11;
using namespace invcurve;

namespace {

FieldSpec field_of(const std::optional<std::string>& minpoly) {
  return minpoly ? parse_field(*minpoly) : FieldSpec{};
}

Weights weights_of(const std::pair<long, long>& w) { return Weights(w.first, w.second); }

std::string profile_json(const MultOperator& op, const UniPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cf : critical_value_factors(p)) {
    JordanProfile prof = jordan_profile(op, cf.factor, p);
    nlohmann::json blocks = nlohmann::json::array();
    for (auto it = prof.blocks.rbegin(); it != prof.blocks.rend(); ++it)
      blocks.push_back({{"size", it->first}, {"count", it->second}});
    out.push_back({{"factor", cf.factor.to_string()},
                   {"multiplicity", cf.multiplicity},
                   {"root", cf.root ? nlohmann::json(cf.root->to_string()) : nlohmann::json(nullptr)},
                   {"blocks", blocks}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_invcurve, m) {
  m.doc() = "Exact Milnor algebra, tangent 1-forms and Saito pairs of plane curves";

  auto base = py::register_exception<Error>(m, "InvcurveError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<NotTame>(m, "NotTame", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<StageError>(m, "StageError", base.ptr());
  py::register_exception<NotTangent>(m, "NotTangent", base.ptr());
  py::register_exception<MissingEmbedding>(m, "MissingEmbedding", base.ptr());
  py::register_exception<DegenerateWindow>(m, "DegenerateWindow", base.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::optional<std::string> minpoly) {
             return parse_poly(text, field_of(minpoly));
           }),
           py::arg("text"), py::arg("minpoly") = py::none())
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("is_zero", &Polynomial::is_zero)
      .def("total_degree", &Polynomial::total_degree)
      .def("diff_x", &Polynomial::diff_x)
      .def("diff_y", &Polynomial::diff_y)
      .def("leading_form", [](const Polynomial& p, std::pair<long, long> w) { return p.leading_form(weights_of(w)); },
           py::arg("weights") = std::pair<long, long>{1, 1})
      .def("__call__", [](const Polynomial& p, double x, double y, std::optional<double> z) {
             return p.evaluate_float(x, y, z);
           },
           py::arg("x"), py::arg("y"), py::arg("embedding") = py::none());

  py::class_<OneForm>(m, "OneForm")
      .def(py::init<Polynomial, Polynomial>(), py::arg("P"), py::arg("Q"))
      .def_readonly("P", &OneForm::P)
      .def_readonly("Q", &OneForm::Q)
      .def("__str__", &OneForm::to_string)
      .def("__repr__", [](const OneForm& w) { return "OneForm" + w.to_string(); })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const OneForm& w, const Polynomial& c) { return c * w; });

  m.def("wedge", [](const OneForm& u, const OneForm& v) { return wedge(u, v).coeff; },
        "Coefficient of u ^ v in front of dx ^ dy");
  m.def("d", &exterior_derivative, "Exterior derivative of a polynomial");
  m.def("is_tangent", &is_tangent, py::arg("form"), py::arg("f"));

  m.def("analyze_json",
        [](const std::string& f, std::pair<long, long> weights, std::optional<std::string> minpoly, bool minimal,
           bool timings) {
          AnalysisReport r;
          {
            py::gil_scoped_release release;
            r = analyze(parse_poly(f, field_of(minpoly)), {weights_of(weights), minimal});
          }
          return to_json(r, timings).dump();
        },
        py::arg("f"), py::arg("weights") = std::pair<long, long>{1, 1}, py::arg("minpoly") = py::none(),
        py::arg("minimal") = true, py::arg("timings") = false);

  m.def("jordan_json",
        [](const std::string& f, std::pair<long, long> weights, std::optional<std::string> minpoly, bool relaxed) {
          MilnorAlgebra ma = milnor_algebra(parse_poly(f, field_of(minpoly)), weights_of(weights), !relaxed);
          MultOperator op = build_Af(ma);
          UniPoly p = min_poly_Af(op);
          nlohmann::json j = {{"mu", ma.mu}, {"minimal_polynomial", p.to_string()}, {"exponent", exponent(p)},
                              {"jordan", nlohmann::json::parse(profile_json(op, p))}};
          return j.dump();
        },
        py::arg("f"), py::arg("weights") = std::pair<long, long>{1, 1}, py::arg("minpoly") = py::none(),
        py::arg("relaxed") = false);

  m.def("syzygy_generators", [](const Polynomial& f) { return ef_from_syzygies(f).forms; });
  m.def("minimal_generators", [](const Polynomial& f) { return minimal_generators(ef_from_syzygies(f)).forms; });
  m.def("generates",
        [](const std::vector<OneForm>& forms, const Polynomial& f) {
          return verify_generation({GeneratorKind::candidate, f, forms}, ef_from_syzygies(f)).generates;
        },
        "Whether the forms generate every 1-form tangent to f = 0");
  m.def("same_module", &same_module);
  m.def("saito_constant",
        [](const OneForm& w0, const OneForm& w1, const Polynomial& f) -> std::optional<std::string> {
          SaitoVerdict v = saito_check(w0, w1, f);
          if (!v.free) return std::nullopt;
          return v.constant->to_string();
        },
        "c with w0 ^ w1 = c f dx ^ dy, or None");

  m.def("render_svg",
        [](const Polynomial& f, double window, int grid, std::optional<double> embedding) {
          return render_svg(f, {window, grid, embedding});
        },
        py::arg("f"), py::arg("window") = 2.0, py::arg("grid") = 200, py::arg("embedding") = py::none());

  m.def("fixture_names", &fixture_names);
  m.def("corpus_json",
        [](std::vector<std::string> only) {
          if (only.empty()) only = fixture_names();
          std::vector<FixtureResult> results;
          {
            py::gil_scoped_release release;
            results = run_corpus(only);
          }
          nlohmann::json out = nlohmann::json::array();
          for (const auto& r : results) {
            nlohmann::json facts = nlohmann::json::array();
            for (const auto& f : r.facts) facts.push_back({{"fact", f.name}, {"passed", f.passed}, {"detail", f.detail}});
            out.push_back({{"fixture", r.name}, {"f", r.f}, {"passed", r.passed()}, {"facts", facts}, {"error", r.error}});
          }
          return out.dump();
        },
        py::arg("only") = std::vector<std::string>{});
}
