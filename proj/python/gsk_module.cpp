#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gsk/catalogue.hpp"
#include "gsk/commands.hpp"
#include "gsk/error.hpp"
#include "gsk/gcw.hpp"
#include "gsk/io.hpp"
#include "gsk/mackey.hpp"
#include "gsk/slice.hpp"
#include "gsk/snf.hpp"
#include "gsk/squares_k0.hpp"

namespace py = pybind11;
using namespace gsk;

namespace {

// Any json value crosses as its text form; the Python side decodes it.
std::string dump(const io::json& j) { return j.dump(); }

GCWComplex complex_from_orbits(const GroupPtr& G, const std::vector<std::vector<int>>& levels) {
  const auto n = static_cast<int>(subgroup_classes(G).size());
  std::vector<GSet> cells;
  for (const auto& level : levels) {
    GSet X = GSet::empty(G);
    for (int c : level) {
      if (c < 0 || c >= n) throw InvalidArgument("class index " + std::to_string(c) + " out of range");
      X = disjoint_union(X, coset_gset(class_representative(G, c)));
    }
    cells.push_back(std::move(X));
  }
  return GCWComplex(G, std::move(cells));
}

BurnsideElement element(const GroupPtr& G, const std::vector<std::int64_t>& coords) {
  return BurnsideElement(G, coords);
}

std::vector<std::string> big_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

// GroupPtr points at a const group, which pybind11 holders cannot carry.
struct PyGroup {
  GroupPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-group equivariant Euler characteristics, Burnside rings and K0 of squares";

  auto base = py::register_exception<Error>(m, "GskError", PyExc_ValueError);
  py::register_exception<NotAGroup>(m, "NotAGroup", base);
  py::register_exception<GroupTooLarge>(m, "GroupTooLarge", base);
  py::register_exception<NotAnAction>(m, "NotAnAction", base);
  py::register_exception<NotInImage>(m, "NotInImage", base);
  py::register_exception<UnsupportedGroup>(m, "UnsupportedGroup", base);
  py::register_exception<UnknownObject>(m, "UnknownObject", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);

  py::class_<PyGroup>(m, "Group")
      .def_static("by_name", [](const std::string& name) { return PyGroup{catalogue::by_name(name)}; }, py::arg("name"))
      .def_static("from_table", [](const std::vector<std::vector<Element>>& t) { return PyGroup{FiniteGroup::from_table(t)}; },
                  py::arg("table"))
      .def_static("from_file", [](const io::fs::path& p) {
        return PyGroup{io::parse_group(io::load_json(p), p.parent_path())};
      })
      .def_property_readonly("order", [](const PyGroup& G) { return G.ptr->order(); })
      .def("is_abelian", [](const PyGroup& G) { return G.ptr->is_abelian(); })
      .def("class_names", [](const PyGroup& G) { return subgroup_classes(G.ptr).names; })
      .def("__repr__", [](const PyGroup& G) { return "<Group of order " + std::to_string(G.ptr->order()) + ">"; });

  m.def("catalogue", [] {
    std::vector<std::string> names;
    for (const auto& [name, G] : catalogue::groups_up_to_order_12()) names.push_back(name);
    return names;
  }, "Names of the shipped groups of order at most 12.");

  m.def("table_of_marks", [](const PyGroup& pg) { return table_of_marks(pg.ptr).marks.to_rows(); }, py::arg("group"));
  m.def("marks", [](const PyGroup& pg, const std::vector<std::int64_t>& a) { return marks(element(pg.ptr, a)); },
        py::arg("group"), py::arg("coords"));
  m.def("from_marks", [](const PyGroup& pg, const std::vector<std::int64_t>& ghost) {
    const GroupPtr& G = pg.ptr;
    return from_marks(G, ghost).coords();
  }, py::arg("group"), py::arg("ghost"));
  m.def("burnside_mul", [](const PyGroup& pg, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    const GroupPtr& G = pg.ptr;
    return mul(element(G, a), element(G, b)).coords();
  }, py::arg("group"), py::arg("a"), py::arg("b"));
  m.def("orbit_string", [](const PyGroup& pg, const std::vector<std::int64_t>& a) {
    const GroupPtr& G = pg.ptr;
    return to_orbit_string(element(G, a));
  }, py::arg("group"), py::arg("coords"));

  m.def("euler_char", [](const PyGroup& pg, const std::vector<std::vector<int>>& levels) {
    const GroupPtr& G = pg.ptr;
    return euler_char(complex_from_orbits(G, levels)).coords();
  }, py::arg("group"), py::arg("levels"), "Cells given per dimension as lists of orbit class indices.");
  m.def("euler_via_strata", [](const PyGroup& pg, const std::vector<std::vector<int>>& levels) {
    const GroupPtr& G = pg.ptr;
    return euler_via_strata(complex_from_orbits(G, levels)).coords();
  }, py::arg("group"), py::arg("levels"));
  m.def("fixed_euler", [](const PyGroup& pg, const std::vector<std::vector<int>>& levels, int cls) {
    const GroupPtr& G = pg.ptr;
    return fixed_euler(complex_from_orbits(G, levels), class_representative(G, cls));
  }, py::arg("group"), py::arg("levels"), py::arg("class_index"));

  m.def("smith_diagonal", [](const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BigMatrix A(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("ragged matrix");
      for (std::size_t j = 0; j < cols; ++j) A(i, j) = static_cast<long>(rows[i][j]);
    }
    return big_strings(smith_normal_form(A).diagonal);
  }, py::arg("rows"), "Invariant factors as decimal strings.");

  m.def("_present_k0", [](const std::string& presentation) {
    return dump(io::to_json(present_k0(io::parse_presentation(io::json::parse(presentation)))));
  });
  m.def("_classes_equal", [](const std::string& presentation, const std::string& a, const std::string& b) {
    return classes_equal(present_k0(io::parse_presentation(io::json::parse(presentation))), a, b);
  });

  m.def("_report", [](const std::string& command, const std::vector<std::string>& files, std::int64_t number) {
    RunReport r;
    if (command == "euler") r = cli::cmd_euler(files.at(0));
    else if (command == "marks") r = cli::cmd_marks(files.at(0));
    else if (command == "mackey-check") r = cli::cmd_mackey_check(files.at(0));
    else if (command == "span-compose") r = cli::cmd_span_compose(files.at(0), files.at(1));
    else if (command == "k0") r = cli::cmd_k0(files.at(0), std::nullopt, std::nullopt);
    else if (command == "slice-counterexample") r = cli::cmd_slice(static_cast<int>(number));
    else if (command == "selftest") r = cli::cmd_selftest(static_cast<std::uint64_t>(number));
    else throw InvalidArgument("unknown command " + command);
    return dump(r.to_json());
  });
}
