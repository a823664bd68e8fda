#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trimlat/cambrian.hpp"
#include "trimlat/conjecture.hpp"
#include "trimlat/families.hpp"
#include "trimlat/io.hpp"
#include "trimlat/trim.hpp"

namespace py = pybind11;
using namespace trimlat;

namespace {

py::object trim_witness(const Lattice& lat) {
  auto w = is_trim(lat);
  if (!w) return py::none();
  py::dict d;
  d["n"] = w->n;
  d["chain"] = w->chain.elements;
  d["join_irreducibles"] = w->join_irreducibles;
  d["meet_irreducibles"] = w->meet_irreducibles;
  return d;
}

Lattice cambrian_quotient(const std::string& type, std::size_t n, const std::string& orient) {
  CoxeterType t = type == "A" ? CoxeterType::A : CoxeterType::B;
  if (type != "A" && type != "B") throw LatticeError(Errc::UnsupportedType, "type must be 'A' or 'B'");
  Orientation o = orient.empty() ? Orientation::all_forward(t, n) : Orientation::parse(orient);
  if (o.type() != t || o.n() != n) throw LatticeError(Errc::InvalidInput, "orientation does not match type and n");
  return build_cambrian(o).quotient;
}

py::dict conjecture(const std::string& group, const std::string& orient) {
  auto g = build_group(group);
  auto o = orient.empty() ? all_diagram_orientations(g).front() : parse_diagram_orientation(g, orient);
  auto pc = pre_cambrian(g, o);
  auto c1 = conjecture1_check(pc);
  auto c2 = conjecture2_check(g, o, pc);
  auto c3 = conjecture3_check(g, o, pc);
  py::dict d;
  d["orientation"] = diagram_orientation_string(g, o);
  d["size"] = c1.size;
  d["trim"] = c1.trim;
  d["consequence_failure"] = c1.failure;
  d["bottoms_match"] = c2.bottoms_listed.equal;
  d["tops_match"] = c2.tops_listed.equal;
  d["coxeter_catalan"] = c3.coxeter_catalan;
  d["isomorphic_to_cambrian"] = c3.isomorphic_to_cambrian;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite lattices, trimness checks and Cambrian lattices";

  py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);

  py::class_<Lattice>(m, "Lattice")
      .def_static("from_json", [](const std::string& text) { return lattice_from_json(text); })
      .def_static("from_covers",
                  [](std::size_t size, const std::vector<std::pair<Elem, Elem>>& covers,
                     std::vector<std::string> names) {
                    std::vector<Cover> cs;
                    for (auto [a, b] : covers) cs.push_back({a, b});
                    return Lattice::from_covers(size, std::move(cs), std::move(names));
                  },
                  py::arg("size"), py::arg("covers"), py::arg("names") = std::vector<std::string>{})
      .def("to_json", [](const Lattice& l) { return lattice_to_json(l); })
      .def("to_dot", [](const Lattice& l) { return lattice_to_dot(l); })
      .def("__len__", &Lattice::size)
      .def_property_readonly("bottom", &Lattice::bottom)
      .def_property_readonly("top", &Lattice::top)
      .def("name", &Lattice::name)
      .def("leq", &Lattice::leq)
      .def("meet", &Lattice::meet)
      .def("join", &Lattice::join)
      .def("covers", [](const Lattice& l) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& c : l.covers()) out.emplace_back(c.lower, c.upper);
        return out;
      });

  m.def("chain_lattice", &chain_lattice, py::arg("length"));
  m.def("boolean_lattice", &boolean_lattice, py::arg("rank"));
  m.def("n5_lattice", &n5_lattice);
  m.def("m3_lattice", &m3_lattice);
  m.def("tamari_lattice", &tamari_lattice, py::arg("n"));
  m.def("cambrian", &cambrian_quotient, py::arg("type"), py::arg("n"), py::arg("orient") = "",
        "Cambrian lattice of type 'A' (S_n) or 'B' as a quotient of weak order.");

  m.def("is_trim", &trim_witness, "Witness dict, or None when the lattice is not trim.");
  m.def("trim_failure_reason", &trim_failure_reason);
  m.def("is_extremal", &is_extremal);
  m.def("is_distributive", &is_distributive);
  m.def("join_irreducibles", &join_irreducibles);
  m.def("meet_irreducibles", &meet_irreducibles);
  m.def("mobius", &mobius, py::arg("lattice"), py::arg("x"), py::arg("y"));
  m.def("conjecture_report", &conjecture, py::arg("group"), py::arg("orient") = "");
}
