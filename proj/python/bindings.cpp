#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tmono/census.hpp"
#include "tmono/errors.hpp"
#include "tmono/report.hpp"
#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"
#include "tmono/tournament.hpp"
#include "tmono/verify.hpp"

namespace py = pybind11;
using namespace tmono;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeffs(const IntPoly& p) {
  py::list out;
  if (p.is_zero()) out.append(0);
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

Mode mode_of(bool skew) { return skew ? Mode::skew : Mode::adjacency; }

py::dict verdict_dict(const MonomorphyVerdict& v) {
  py::dict d;
  d["k"] = v.k;
  d["mode"] = std::string(to_string(v.mode));
  d["monomorphic"] = v.monomorphic();
  if (v.common) {
    d["common"] = coeffs(*v.common);
  } else {
    d["witness"] = py::make_tuple(v.witness->alpha.members(), v.witness->beta.members());
    d["witness_polys"] = py::make_tuple(coeffs(v.witness->poly_alpha), coeffs(v.witness->poly_beta));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_tmono, m) {
  m.doc() = "Exact spectral monomorphy checks for tournaments";

  static py::exception<Error> base(m, "TmonoError");
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
  static py::exception<UnsupportedError> unsupported(m, "UnsupportedError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const PreconditionError& e) {
      precondition(e.what());
    } catch (const UnsupportedError& e) {
      unsupported(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<Tournament>(m, "Tournament")
      .def_static("parse", &parse_tournament, py::arg("text"))
      .def_static("from_adjacency", &Tournament::from_adjacency, py::arg("rows"))
      .def("serialize", &serialize)
      .def_property_readonly("order", &Tournament::order)
      .def("dominates", &Tournament::dominates, py::arg("i"), py::arg("j"))
      .def("out_degree", &Tournament::out_degree, py::arg("v"))
      .def("__eq__", [](const Tournament& a, const Tournament& b) { return a == b; })
      .def("__repr__", [](const Tournament& t) { return "<Tournament on " + std::to_string(t.order()) + " vertices>"; })
      .def("__str__", &serialize);

  m.def("transitive", &transitive, py::arg("n"));
  m.def("paley", &paley, py::arg("p"));
  m.def("circulant", [](std::size_t n, const std::vector<std::size_t>& symbols) { return circulant(n, VertexSet::of(symbols)); },
        py::arg("n"), py::arg("symbols"));
  m.def("counterexample7", &counterexample7);
  m.def("reversed_transitive", &reversed_transitive, py::arg("n"));
  m.def("triple", &triple, py::arg("t1"), py::arg("t2"), py::arg("t3"));
  m.def("switch", [](const Tournament& t, const std::vector<std::size_t>& x) { return switch_tournament(t, VertexSet::of(x)); },
        py::arg("t"), py::arg("x"));

  m.def("structure_report", [](const Tournament& t) { return structure_to_json(structure_report(t)); }, py::arg("t"),
        "Structure report as a JSON document.");

  m.def("char_poly", [](const Tournament& t, bool skew) { return coeffs(char_poly(t, mode_of(skew))); }, py::arg("t"),
        py::arg("skew") = false, "Ascending integer coefficients of det(zI - M).");

  m.def("spectral_monomorphy",
        [](const Tournament& t, std::size_t k, bool skew, unsigned jobs) {
          MonomorphyVerdict v;
          {
            py::gil_scoped_release release;
            v = spectral_monomorphy(t, k, mode_of(skew), jobs);
          }
          return verdict_dict(v);
        },
        py::arg("t"), py::arg("k"), py::arg("skew") = false, py::arg("jobs") = 1);

  m.def("classify_n2", [](const Tournament& t) { return std::string(to_string(classify_n2(t))); }, py::arg("t"));
  m.def("classify_skew",
        [](const Tournament& t) {
          const SkewClass c = classify_skew(t);
          py::object cert = py::none();
          if (c.certificate) cert = py::cast(c.certificate->members());
          return py::make_tuple(std::string(to_string(c.tag)), cert);
        },
        py::arg("t"));
  m.def("is_skew_conference", &is_skew_conference, py::arg("t"));

  m.def("verify_suites", [] {
    std::vector<std::string> names;
    for (auto n : verify_suite_names()) names.emplace_back(n);
    return names;
  });
  m.def("run_verify",
        [](const std::string& suite, std::optional<std::size_t> n, std::size_t trials, std::uint64_t seed) {
          VerifyOptions o;
          o.n = n;
          o.trials = trials;
          o.seed = seed;
          py::gil_scoped_release release;
          return verify_to_json(run_verify(suite, o));
        },
        py::arg("suite"), py::arg("n") = py::none(), py::arg("trials") = 100, py::arg("seed") = 1);

  m.def("run_census",
        [](std::size_t n, std::size_t k, const std::string& question, bool skew, unsigned jobs,
           std::optional<std::uint64_t> samples, std::uint64_t seed) {
          CensusParams p;
          p.n = n;
          p.k = k;
          p.mode = mode_of(skew);
          p.question = parse_question(question);
          if (samples) {
            p.sampled = true;
            p.samples = *samples;
            p.seed = seed;
          }
          CensusOptions o;
          o.jobs = jobs;
          py::gil_scoped_release release;
          return census_to_json(run_census(p, o));
        },
        py::arg("n"), py::arg("k"), py::arg("question"), py::arg("skew") = false, py::arg("jobs") = 1,
        py::arg("samples") = py::none(), py::arg("seed") = 0);
}
