#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tpcheck/cli.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/proof.hpp"

namespace py = pybind11;
using namespace tpcheck;

namespace {

std::string tri_text(Tri v) { return std::string(1, tri_char(v)); }

py::object path_or_none(const std::optional<StatePath>& p) {
  if (!p) return py::none();
  return py::make_tuple(p->prefix, p->loop);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Three-valued LTL checking of partial Kripke structures";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<Pks>(m, "Model")
      .def_property_readonly("name", &Pks::name)
      .def_property_readonly("states", &Pks::states)
      .def_property_readonly("props", &Pks::props)
      .def_property_readonly("initial", [](const Pks& k) {
        std::vector<std::string> out;
        for (StateId s : k.initial()) out.push_back(k.state_name(s));
        return out;
      })
      .def("label", [](const Pks& k, const std::string& s, const std::string& p) {
        auto sid = k.find_state(s);
        auto pid = k.find_prop(p);
        if (!sid || !pid) throw py::key_error(s + "/" + p);
        return tri_text(k.label(*sid, *pid));
      })
      .def("successors", [](const Pks& k, const std::string& s) {
        auto sid = k.find_state(s);
        if (!sid) throw py::key_error(s);
        std::vector<std::string> out;
        for (StateId t : k.successors(*sid)) out.push_back(k.state_name(t));
        return out;
      })
      .def("size", &model_size)
      .def("to_text", [](const Pks& k) { return to_text(k); })
      .def("__eq__", [](const Pks& a, const Pks& b) { return a == b; });

  py::class_<TopologicalProof>(m, "Proof")
      .def_property_readonly("property", &TopologicalProof::property)
      .def_property_readonly("level", [](const TopologicalProof& p) { return tri_text(p.level()); })
      .def("size", &proof_size)
      .def("to_text", [](const TopologicalProof& p) { return to_text(p); })
      .def("__len__", &TopologicalProof::clause_count);

  py::class_<AnalysisResult>(m, "Analysis")
      .def_property_readonly("verdict", [](const AnalysisResult& r) { return tri_text(r.verdict); })
      .def_property_readonly("counterexample", [](const AnalysisResult& r) { return path_or_none(r.counterexample); })
      .def_property_readonly("proof", [](const AnalysisResult& r) { return r.proof; });

  m.def("parse_model", &parse_pks, py::arg("text"));
  m.def("parse_proof", &parse_proof, py::arg("text"));

  m.def(
      "analyze",
      [](const Pks& model, const std::string& formula, const std::string& name) {
        return analyze(model, Property{name, parse_ltl(formula)});
      },
      py::arg("model"), py::arg("formula"), py::arg("name") = "property",
      "Three-valued verdict with counterexample and proof.");

  m.def(
      "analyze_file",
      [](const Pks& model, const std::string& properties) {
        std::vector<std::pair<std::string, AnalysisResult>> out;
        for (const auto& p : parse_properties(properties)) out.emplace_back(p.name, analyze(model, p));
        return out;
      },
      py::arg("model"), py::arg("properties"));

  m.def(
      "recheck",
      [](const TopologicalProof& proof, const Pks& revised) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : recheck(proof, revised)) out.emplace_back(v.clause, v.observed);
        return out;
      },
      py::arg("proof"), py::arg("revised"), "Violated proof clauses; empty when the re-check passes.");

  m.def("is_refinement", &is_refinement, py::arg("model"), py::arg("candidate"));
  m.def("is_revision", &is_revision, py::arg("model"), py::arg("candidate"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "tpcheck");
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
