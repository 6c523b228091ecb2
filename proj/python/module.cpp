#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spantree/errors.hpp"
#include "spantree/formulas.hpp"
#include "spantree/graph_spec.hpp"
#include "spantree/laplacian.hpp"
#include "spantree/treebrute.hpp"
#include "spantree/verify.hpp"

namespace py = pybind11;
using namespace spantree;

namespace {

py::object to_py_int(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

Partition partition_of(const std::vector<unsigned>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw NotThresholdSequence("degree sequence must be weakly decreasing");
  }
  return Partition(parts);
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["claim_id"] = v.claim_id;
  d["status"] = to_string(v.status);
  d["witness"] = v.witness ? py::object(py::str(v.witness->to_string())) : py::object(py::none());
  d["note"] = v.note;
  d["elapsed_ms"] = v.elapsed_ms;
  return d;
}

WeightScheme scheme_of(const std::string& name) {
  auto w = parse_weight_scheme(name);
  if (!w) throw ParseError("unknown weight scheme '" + name + "'", 0);
  return *w;
}

TreeStatistic statistic_of(const std::string& name) {
  auto s = parse_tree_statistic(name);
  if (!s) throw ParseError("unknown statistic '" + name + "'", 0);
  return *s;
}

std::vector<Verdict> run_claim(const std::string& claim, unsigned n, const std::vector<unsigned>& dims,
                               const std::vector<unsigned>& lambda, const std::vector<unsigned>& subset,
                               unsigned direction, bool brute) {
  const Route route = brute ? Route::BruteForce : Route::Determinant;
  if (claim == "cayley") return verify_cayley_prufer(n);
  if (claim == "directions") return verify_directions(dims);
  if (claim == "divisibility") return verify_divisibility(dims).verdicts;
  if (claim == "cube") return {verify_cube_theorem(n, route)};
  if (claim == "threshold") return verify_threshold_theorem(partition_of(lambda), route);
  if (claim == "cube-nullvector") return {verify_cube_nullvector(n, subset)};
  if (claim == "decoupled-nullvector") return {verify_decoupled_nullvectors(dims, direction)};
  if (claim == "threshold-nullvector") return verify_threshold_nullvectors(partition_of(lambda));
  throw ParseError("unknown claim '" + claim + "'", 0);
}

}  // namespace

PYBIND11_MODULE(_spantree, m) {
  m.doc() = "Exact spanning tree enumerators";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<NotDivisible>(m, "NotDivisible", error.ptr());
  py::register_exception<NotThresholdSequence>(m, "NotThresholdSequence", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init<long>())
      .def_static("parse", [](const std::string& s) { return Polynomial::parse(s); })
      .def_static("from_json", [](const std::string& s) { return Polynomial::from_json(nlohmann::json::parse(s)); })
      .def("to_json", [](const Polynomial& p) { return p.to_json().dump(); })
      .def("is_zero", &Polynomial::is_zero)
      .def("__len__", &Polynomial::size)
      .def("coefficient_sum", [](const Polynomial& p) { return to_py_int(p.coefficient_sum()); })
      .def("pow", &Polynomial::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n_vertices", &Graph::n_vertices)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("is_connected", &Graph::is_connected)
      .def("degrees", &Graph::degrees)
      .def("__repr__", &Graph::describe);

  m.def("parse_spec", [](const std::string& s) { return parse_spec(s); }, py::arg("spec"));

  m.def(
      "count",
      [](const std::string& spec, bool brute, std::uint64_t cap) {
        const Graph g = parse_spec(spec);
        if (!g.is_connected()) return to_py_int(0);
        if (!brute) return to_py_int(predicted_tree_count(g));
        std::uint64_t trees = 0;
        for_each_spanning_tree(g, [&](const SpanningTree&) { ++trees; }, cap);
        return to_py_int(Integer(std::to_string(trees)));
      },
      py::arg("spec"), py::arg("brute") = false, py::arg("cap") = kDefaultTreeCap);

  m.def(
      "tree_enumerator",
      [](const std::string& spec, const std::string& weights, std::optional<std::pair<unsigned, unsigned>> reduce) {
        const Graph g = parse_spec(spec);
        const std::size_t last = g.n_vertices() - 1;
        if (!reduce) return tree_enumerator_det(g, scheme_of(weights), last, last);
        if (reduce->first < 1 || reduce->second < 1) throw IndexOutOfRange("reduction indices are 1-based");
        return tree_enumerator_det(g, scheme_of(weights), reduce->first - 1, reduce->second - 1);
      },
      py::arg("spec"), py::arg("weights"), py::arg("reduce") = py::none(),
      "Determinant of the reduced weighted Laplacian; reduce=(r, s) is 1-based.");

  m.def(
      "enumerate",
      [](const std::string& spec, const std::string& stat, std::uint64_t cap) {
        return enumerate_sum(parse_spec(spec), statistic_of(stat), cap);
      },
      py::arg("spec"), py::arg("stat"), py::arg("cap") = kDefaultTreeCap,
      "Sum of the statistic monomial over explicitly enumerated spanning trees.");

  m.def(
      "verify",
      [](const std::string& claim, unsigned n, const std::vector<unsigned>& dims, const std::vector<unsigned>& lam,
         const std::vector<unsigned>& subset, unsigned direction, bool brute) {
        py::list out;
        for (const Verdict& v : run_claim(claim, n, dims, lam, subset, direction, brute)) out.append(verdict_dict(v));
        return out;
      },
      py::arg("claim"), py::arg("n") = 0, py::arg("dims") = std::vector<unsigned>{},
      py::arg("lam") = std::vector<unsigned>{}, py::arg("subset") = std::vector<unsigned>{},
      py::arg("direction") = 1, py::arg("brute") = false);

  m.def(
      "conjecture_scan",
      [](const std::vector<unsigned>& dims) {
        const ConjectureFinding f = conjecture_scan(dims);
        py::dict d = verdict_dict(f.verdict);
        d["terms"] = f.terms;
        d["min_coefficient"] = f.min_coefficient ? to_py_int(*f.min_coefficient) : py::object(py::none());
        d["quotient"] = f.quotient ? py::cast(*f.quotient) : py::object(py::none());
        return d;
      },
      py::arg("dims"));

  m.def("cayley_prufer_rhs", &cayley_prufer_rhs, py::arg("n"));
  m.def("directions_rhs", &directions_rhs, py::arg("dims"));
  m.def("cube_rhs", &cube_rhs, py::arg("n"));
  m.def("threshold_rhs", [](const std::vector<unsigned>& lam) { return threshold_rhs(partition_of(lam)); },
        py::arg("lam"));
  m.def("merris_count", [](const std::vector<unsigned>& lam) { return to_py_int(merris_count(partition_of(lam))); },
        py::arg("lam"));
  m.def("div_exact", py::overload_cast<const Polynomial&, const Polynomial&>(&div_exact), py::arg("n"),
        py::arg("d"));
  m.def("is_nonneg", [](const Polynomial& p) { return is_nonneg(p).nonneg; }, py::arg("p"));
}
