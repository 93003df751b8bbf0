#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewgr/cli.hpp"

namespace py = pybind11;
using namespace skewgr;

namespace {

struct PySkewElement {
  SkewElement value;

  PySkewElement mul(const PySkewElement& o) const { return {skew_mul(value, o.value)}; }
  PySkewElement add(const PySkewElement& o) const { return {skew_add(value, o.value)}; }
  PySkewElement sub(const PySkewElement& o) const { return {skew_sub(value, o.value)}; }
  PySkewElement neg() const { return {skew_neg(value)}; }
  bool eq(const PySkewElement& o) const { return value == o.value; }
  bool is_zero() const { return value.is_zero(); }
  std::string repr() const { return value.to_string(); }
};

struct PySemilattice {
  Semilattice lattice;

  static PySemilattice make(std::vector<std::string> names, std::vector<std::vector<int>> meet) {
    return {Semilattice(std::move(names), std::move(meet), 0)};
  }

  py::dict tight_summary() const {
    auto filters = enumerate_filters(lattice);
    int ultra = 0, tight = 0;
    for (const auto& f : filters) {
      if (is_ultrafilter(lattice, f)) ++ultra;
      if (is_tight_filter(lattice, f)) ++tight;
    }
    py::dict out;
    out["filters"] = filters.size();
    out["ultrafilters"] = ultra;
    out["tight"] = tight;
    return out;
  }

  std::vector<std::vector<std::string>> tight_filters() const {
    TightSpace T(lattice);
    std::vector<std::vector<std::string>> out;
    for (const auto& f : T.filters()) {
      std::vector<std::string> names;
      for (int i : f) names.push_back(lattice.name(i));
      out.push_back(names);
    }
    return out;
  }
};

struct PyGraphAlgebra {
  std::shared_ptr<const GraphSemigroup> semigroup;
  LeavittMap map;

  static PyGraphAlgebra make(std::vector<std::string> vertices,
                             std::vector<std::tuple<std::string, std::string, std::string>> edges,
                             const std::string& ring, int depth) {
    std::vector<DirectedGraph::Edge> es;
    DirectedGraph g(vertices, {});
    for (const auto& [name, src, dst] : edges)
      es.push_back({name, g.vertex_index(src), g.vertex_index(dst)});
    auto S = std::make_shared<GraphSemigroup>(DirectedGraph(vertices, es));
    return {S, leavitt_map(S, Ring::parse(ring), depth)};
  }

  bool relations_pass() const { return map.relations.all_pass(); }
  bool is_unital() const { return find_unit(*map.algebra->bundle()).has_value(); }

  PySkewElement vertex_unit(const std::string& v) const { return {map.vertex_units.at(v)}; }
  PySkewElement edge_gen(const std::string& e) const { return {map.edge_gens.at(e)}; }
  PySkewElement edge_star(const std::string& e) const { return {map.edge_stars.at(e)}; }

  PySkewElement unit() const {
    auto u = find_unit(*map.algebra->bundle());
    if (!u) throw std::domain_error("algebra is not unital");
    return {map.algebra->vdelta(*u, GroupWord{})};
  }

  PySkewElement local_unit(const PySkewElement& x) const {
    return {map.algebra->vdelta(local_unit_for(x.value), GroupWord{})};
  }

  std::vector<std::pair<std::string, int>> graded_dimensions(int depth) const {
    std::vector<std::pair<std::string, int>> out;
    auto bundle = map.algebra->bundle();
    const auto& B = *bundle->space();
    const auto& G = *bundle->group();
    for (const auto& w : bundle->words_up_to(depth)) {
      auto bound = bundle->ideal(w).bound();
      if (!bound && B.has_top()) bound = B.top();
      if (!bound || (bound->is_bottom() && !w.is_identity())) continue;
      out.push_back({G.to_string(w), static_cast<int>(B.pieces(B.refined(*bound, depth)).size())});
    }
    return out;
  }
};

struct PyLabelledAlgebra {
  std::shared_ptr<const LabelledSemigroup> semigroup;
  CkMap map;

  static PyLabelledAlgebra make(
      std::vector<std::string> vertices,
      std::vector<std::tuple<std::string, std::string, std::string, std::string>> edges,
      const std::string& ring, int depth) {
    std::vector<std::string> alphabet;
    std::vector<LabelledGraph::Edge> es;
    LabelledGraph probe(vertices, {}, {});
    auto letter = [&](const std::string& l) {
      for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == l) return static_cast<int>(i);
      alphabet.push_back(l);
      return static_cast<int>(alphabet.size()) - 1;
    };
    for (const auto& [name, src, dst, label] : edges)
      es.push_back({name, probe.vertex_index(src), probe.vertex_index(dst), letter(label)});
    LabelledGraph g(vertices, alphabet, es);
    auto fam = LabelledFamily::powerset(g);
    auto S = std::make_shared<LabelledSemigroup>(LabelledSpace{g, fam});
    return {S, ck_map(S, Ring::parse(ring), depth)};
  }

  bool relations_pass() const { return map.relations.all_pass(); }
  bool products_pass(int depth) const {
    return generator_products(semigroup, map.algebra->ring(), depth).all_pass();
  }
  PySkewElement projection(const std::string& set_key) const { return {map.projections.at(set_key)}; }
  PySkewElement letter_gen(const std::string& a) const { return {map.letter_gens.at(a)}; }
  PySkewElement letter_star(const std::string& a) const { return {map.letter_stars.at(a)}; }
};

py::tuple run_command(const std::string& command, const std::string& path, int depth, int trials,
                      std::uint64_t seed, const std::string& ring) {
  cli::Options opts;
  opts.depth = depth;
  opts.trials = trials;
  opts.seed = seed;
  if (!ring.empty()) opts.ring = ring;
  cli::CommandResult res;
  if (command == "validate")
    res = cli::cmd_validate(path, opts);
  else if (command == "tight")
    res = cli::cmd_tight(path, opts);
  else if (command == "algebra")
    res = cli::cmd_algebra(path, opts);
  else if (command == "ck")
    res = cli::cmd_ck(path, opts);
  else if (command == "unitize")
    res = cli::cmd_unitize(path, opts);
  else if (command == "action-check")
    res = cli::cmd_action_check(path, opts);
  else
    throw std::invalid_argument("unknown command '" + command + "'");
  return py::make_tuple(res.exit_code, res.text);
}

}  // namespace

PYBIND11_MODULE(skewgr, m) {
  m.doc() = "partial skew group rings of inverse semigroups over generalized Boolean algebras";

  py::class_<PySkewElement>(m, "SkewElement")
      .def("__mul__", &PySkewElement::mul)
      .def("__add__", &PySkewElement::add)
      .def("__sub__", &PySkewElement::sub)
      .def("__neg__", &PySkewElement::neg)
      .def("__eq__", &PySkewElement::eq)
      .def("is_zero", &PySkewElement::is_zero)
      .def("__repr__", &PySkewElement::repr);

  py::class_<PySemilattice>(m, "Semilattice")
      .def(py::init(&PySemilattice::make), py::arg("names"), py::arg("meet_table"))
      .def("tight_summary", &PySemilattice::tight_summary)
      .def("tight_filters", &PySemilattice::tight_filters);

  py::class_<PyGraphAlgebra>(m, "GraphAlgebra")
      .def(py::init(&PyGraphAlgebra::make), py::arg("vertices"), py::arg("edges"),
           py::arg("ring") = "integers", py::arg("depth") = 3)
      .def("relations_pass", &PyGraphAlgebra::relations_pass)
      .def("is_unital", &PyGraphAlgebra::is_unital)
      .def("vertex_unit", &PyGraphAlgebra::vertex_unit)
      .def("edge_gen", &PyGraphAlgebra::edge_gen)
      .def("edge_star", &PyGraphAlgebra::edge_star)
      .def("unit", &PyGraphAlgebra::unit)
      .def("local_unit", &PyGraphAlgebra::local_unit)
      .def("graded_dimensions", &PyGraphAlgebra::graded_dimensions, py::arg("depth") = 3);

  py::class_<PyLabelledAlgebra>(m, "LabelledAlgebra")
      .def(py::init(&PyLabelledAlgebra::make), py::arg("vertices"), py::arg("edges"),
           py::arg("ring") = "integers", py::arg("depth") = 3)
      .def("relations_pass", &PyLabelledAlgebra::relations_pass)
      .def("products_pass", &PyLabelledAlgebra::products_pass, py::arg("depth") = 3)
      .def("projection", &PyLabelledAlgebra::projection)
      .def("letter_gen", &PyLabelledAlgebra::letter_gen)
      .def("letter_star", &PyLabelledAlgebra::letter_star);

  m.def("run_command", &run_command, py::arg("command"), py::arg("path"), py::arg("depth") = 3,
        py::arg("trials") = 500, py::arg("seed") = 0, py::arg("ring") = "",
        "run a batch command on a fixture file; returns (exit_code, report)");
}
