#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcktop/instance.hpp"

namespace py = pybind11;
using namespace bcktop;

namespace {

std::vector<Index> to_list(const ElementSet& s) { return s.elements(); }

std::vector<std::vector<Index>> to_lists(const std::vector<ElementSet>& sets) {
  std::vector<std::vector<Index>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

ElementSet to_set(std::size_t universe, const std::vector<Index>& elements) {
  return ElementSet(universe, elements);
}

Dss make_dss(const BckModule& m, const std::vector<std::vector<Index>>& chain) {
  std::vector<Submodule> subs;
  for (const auto& c : chain) subs.push_back(Submodule::of(m, to_set(m.size(), c)));
  return Dss::of(m, std::move(subs));
}

py::dict report_dict(const VerdictReport& r) {
  py::dict d;
  d["claim"] = r.claim;
  d["instance"] = r.instance;
  d["holds"] = r.holds;
  d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::object(py::none());
  return d;
}

py::list report_list(const std::vector<VerdictReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(report_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite BCK-algebras, BCK-modules and Baig topologies";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error.ptr());
  py::register_exception<NotASubmodule>(m, "NotASubmodule", error.ptr());
  py::register_exception<NotBoundedImplicative>(m, "NotBoundedImplicative", error.ptr());
  py::register_exception<CarrierTooLarge>(m, "CarrierTooLarge", error.ptr());
  py::register_exception<io::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<io::ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<io::UsageError>(m, "UsageError", error.ptr());

  py::class_<BckAlgebra>(m, "BckAlgebra")
      .def_static("from_table", &BckAlgebra::from_table, py::arg("star"), py::arg("one") = py::none())
      .def_property_readonly("size", &BckAlgebra::size)
      .def_property_readonly("table", &BckAlgebra::table)
      .def_property_readonly("one", &BckAlgebra::one)
      .def("star", &BckAlgebra::star)
      .def("leq", &BckAlgebra::leq)
      .def("meet", &BckAlgebra::meet)
      .def("is_bounded", [](const BckAlgebra& a) { return is_bounded(a); })
      .def("is_commutative", [](const BckAlgebra& a) { return is_commutative(a); })
      .def("is_implicative", [](const BckAlgebra& a) { return is_implicative(a); })
      .def(py::self == py::self);
  m.def("chain_algebra", &chain_algebra, py::arg("n"));

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def_static("from_table", &AbelianGroup::from_table, py::arg("add"))
      .def_static("cyclic", &AbelianGroup::cyclic, py::arg("n"))
      .def_static("klein", &AbelianGroup::klein)
      .def_property_readonly("size", &AbelianGroup::size)
      .def_property_readonly("table", &AbelianGroup::table);

  py::class_<BckModule>(m, "BckModule")
      .def_static("from_tables", &BckModule::from_tables, py::arg("algebra"), py::arg("group"), py::arg("action"))
      .def_property_readonly("algebra", &BckModule::algebra)
      .def_property_readonly("group", &BckModule::group)
      .def_property_readonly("action_table", &BckModule::action_table)
      .def_property_readonly("size", &BckModule::size)
      .def("add", &BckModule::add)
      .def("act", &BckModule::act)
      .def("submodules",
           [](const BckModule& mod) {
             std::vector<std::vector<Index>> out;
             for (const auto& s : enumerate_submodules(mod)) out.push_back(s.elements().elements());
             return out;
           })
      .def("is_submodule",
           [](const BckModule& mod, const std::vector<Index>& s) { return is_submodule(mod, to_set(mod.size(), s)); })
      .def(py::self == py::self);
  m.def("scalar_module_over_c2", &scalar_module_over_c2, py::arg("group"));
  m.def("self_module", &self_module, py::arg("algebra"));

  py::class_<ModuleHom>(m, "ModuleHom")
      .def_static("from_map", &ModuleHom::from_map, py::arg("source"), py::arg("target"), py::arg("map"))
      .def_property_readonly("map", &ModuleHom::map)
      .def_property_readonly("source", &ModuleHom::source)
      .def_property_readonly("target", &ModuleHom::target)
      .def("__call__", &ModuleHom::operator())
      .def("kernel", [](const ModuleHom& f) { return kernel(f).elements().elements(); })
      .def("image", [](const ModuleHom& f) { return image(f).elements().elements(); });
  m.def("enumerate_homs", &enumerate_homs, py::arg("source"), py::arg("target"));

  py::class_<Dss>(m, "Dss")
      .def(py::init(&make_dss), py::arg("module"), py::arg("chain"))
      .def_property_readonly("length", &Dss::length)
      .def("at", [](const Dss& d, std::size_t n) { return d.at(n).elements().elements(); })
      .def("__str__", &Dss::str);

  py::class_<BaigTopology>(m, "BaigTopology")
      .def_property_readonly("dss", &BaigTopology::dss)
      .def_property_readonly("size", &BaigTopology::size)
      .def("opens", [](const BaigTopology& t) { return to_lists(t.opens()); })
      .def("base", [](const BaigTopology& t) { return to_lists(t.base()); })
      .def("is_open", [](const BaigTopology& t, const std::vector<Index>& s) { return is_open(t, to_set(t.size(), s)); })
      .def("is_closed", [](const BaigTopology& t, const std::vector<Index>& s) { return is_closed(t, to_set(t.size(), s)); })
      .def("is_clopen", [](const BaigTopology& t, const std::vector<Index>& s) { return is_clopen(t, to_set(t.size(), s)); })
      .def("is_connected", [](const BaigTopology& t) { return is_connected(t); })
      .def("neighbourhood", [](const BaigTopology& t, Index x) { return to_list(t.space().neighbourhood(x)); });
  m.def("build_baig", &build_baig, py::arg("dss"));
  m.def("enumeration_bound", &enumeration_bound);

  py::class_<TopologizedHom>(m, "TopologizedHom")
      .def(py::init([](const ModuleHom& f, const Dss& a, const Dss& b) { return TopologizedHom::make(f, a, b); }),
           py::arg("hom"), py::arg("source_dss"), py::arg("target_dss"))
      .def_property_readonly("hom", &TopologizedHom::hom)
      .def("is_compatible", [](const TopologizedHom& th) { return is_compatible(th); })
      .def("is_strict", [](const TopologizedHom& th) { return is_strict(th); })
      .def("is_continuous", [](const TopologizedHom& th) { return is_continuous(th.map()); })
      .def("is_open", [](const TopologizedHom& th) { return is_open_map(th.map()); })
      .def("is_alpha_epi", [](const TopologizedHom& th) { return is_alpha_epi_all_n(th); })
      .def("check", [](const TopologizedHom& th, const std::string& property) {
        const auto r = io::check_property(th, property);
        return py::make_tuple(r.holds, r.witness);
      });

  py::class_<io::InstanceFile>(m, "Instance")
      .def_static("parse", &io::parse_instance, py::arg("text"))
      .def_static("load", &io::load_instance, py::arg("path"))
      .def("serialize", [](const io::InstanceFile& f) { return io::serialize(f); })
      .def_property_readonly("algebra", [](const io::InstanceFile& f) { return f.algebra; })
      .def("module", [](const io::InstanceFile& f, const std::string& name) { return f.module(name).module; })
      .def("dss", [](const io::InstanceFile& f, const std::string& name) { return f.chain(name).dss; })
      .def("hom", [](const io::InstanceFile& f, const std::string& name) { return f.hom(name).hom; })
      .def("module_names", [](const io::InstanceFile& f) {
        std::vector<std::string> out;
        for (const auto& d : f.modules) out.push_back(d.name);
        return out;
      })
      .def("__eq__", [](const io::InstanceFile& a, const io::InstanceFile& b) { return a == b; });

  m.def(
      "run_suite",
      [](const io::InstanceFile& f) {
        auto reports = run_space_suite(io::declared_spaces(f));
        for (auto& r : run_theorem_suite(io::declared_homs(f))) reports.push_back(std::move(r));
        for (auto& r : io::run_checks(f)) reports.push_back(std::move(r));
        return report_list(reports);
      },
      py::arg("instance"));
}
