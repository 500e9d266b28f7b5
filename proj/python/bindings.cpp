#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tomseq/connectivity.hpp"
#include "tomseq/enumerate.hpp"
#include "tomseq/marks.hpp"
#include "tomseq/perm.hpp"
#include "tomseq/properties.hpp"
#include "tomseq/report.hpp"
#include "tomseq/transforms.hpp"

namespace py = pybind11;
using namespace tomseq;

namespace {

IntSeq to_seq(const std::vector<std::int64_t>& v) { return IntSeq(v); }

std::vector<std::vector<Permutation::Point>> element_images(const Group& g) {
  std::vector<std::vector<Permutation::Point>> out;
  for (const auto& e : g.elements()) out.emplace_back(e.images().begin(), e.images().end());
  return out;
}

py::dict flags_dict(const PropertyFlags& f) {
  py::dict d;
  for (auto p : kAllProperties) d[py::str(std::string(property_name(p)))] = f.has(p);
  return d;
}

}  // namespace

PYBIND11_MODULE(_tomseq, m) {
  m.doc() = "Subgroup lattices and tables of marks of S_n and A_n";

  py::register_exception<InvalidMarksTable>(m, "InvalidMarksTable", PyExc_ValueError);
  py::register_exception<NotAnEulerImage>(m, "NotAnEulerImage", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Permutation::Point>>(), py::arg("images"))
      .def_static("from_cycles", py::overload_cast<std::size_t, const std::vector<std::vector<Permutation::Point>>&>(
                                     &Permutation::from_cycles),
                  py::arg("degree"), py::arg("cycles"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation& p) {
                               return std::vector<Permutation::Point>(p.images().begin(), p.images().end());
                             })
      .def("inverse", &Permutation::inverse)
      .def("order", &Permutation::order)
      .def("is_even", &Permutation::is_even)
      .def("__call__", &Permutation::operator())
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return compose(a, b); })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return PermutationHash{}(p); })
      .def("__repr__", &Permutation::to_string);

  py::class_<Group>(m, "Group")
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("generators", &Group::generators)
      .def("elements", &element_images)
      .def("__contains__", &Group::contains)
      .def("__len__", &Group::order)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; });

  m.def("symmetric_group", &symmetric_group, py::arg("n"));
  m.def("alternating_group", &alternating_group, py::arg("n"));
  m.def("closure", [](const std::vector<Permutation>& gens, std::size_t degree) { return closure(gens, degree); },
        py::arg("generators"), py::arg("degree"));
  m.def("normalizer", &normalizer, py::arg("g"), py::arg("h"));
  m.def("are_conjugate", [](const Group& g, const Group& h, const Group& k) { return are_conjugate(g, h, k).has_value(); },
        py::arg("g"), py::arg("h"), py::arg("k"));

  py::class_<SubgroupClass>(m, "SubgroupClass")
      .def_readonly("representative", &SubgroupClass::representative)
      .def_readonly("class_length", &SubgroupClass::class_length)
      .def_readonly("order", &SubgroupClass::order)
      .def_readonly("label", &SubgroupClass::label);
  py::class_<ClassTable>(m, "ClassTable")
      .def_readonly("group", &ClassTable::group)
      .def_readonly("classes", &ClassTable::classes)
      .def("__len__", &ClassTable::size)
      .def("total_subgroups", &ClassTable::total_subgroups);
  m.def("class_table", [](const Group& g, std::size_t max_order) { return class_table(g, EnumerationOptions{max_order}); },
        py::arg("g"), py::arg("max_order") = kDefaultOrderBudget);
  m.def("classify", [](const Group& h) { return flags_dict(classify(h)); }, py::arg("h"));

  py::class_<ClassSummary>(m, "ClassSummary")
      .def_readonly("order", &ClassSummary::order)
      .def_readonly("length", &ClassSummary::length)
      .def_readonly("label", &ClassSummary::label);
  py::class_<MarksTable>(m, "MarksTable")
      .def_readonly("name", &MarksTable::name)
      .def_readonly("group_order", &MarksTable::group_order)
      .def_readonly("classes", &MarksTable::classes)
      .def_readonly("beta", &MarksTable::beta)
      .def("__len__", &MarksTable::size)
      .def("__getitem__", [](const MarksTable& mt, std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= mt.size() || ij.second >= mt.size()) throw py::index_error();
        return mt(ij.first, ij.second);
      });
  m.def("marks_table", [](const Group& g, unsigned threads) { return marks_table(class_table(g), threads); },
        py::arg("g"), py::arg("threads") = 1);
  m.def("family_marks_table", [](const std::string& family, std::size_t n) {
        return compute_group_data(parse_family(family), n).marks;
      }, py::arg("family"), py::arg("n"));
  m.def("validate", &validate, py::arg("table"));
  m.def("to_tom_text", &to_tom_text, py::arg("table"));
  m.def("parse_tom_text", [](const std::string& s) { return parse_tom_text(s); }, py::arg("text"));
  m.def("summarize", [](const MarksTable& mt) {
        const auto s = summarize(mt);
        py::dict d;
        d["total_subgroups"] = s.total_subgroups;
        d["sum_of_marks"] = s.sum_of_marks;
        d["diagonal_sum"] = s.diagonal_sum;
        d["poset_incidences"] = s.poset_incidences;
        d["lattice_incidences"] = s.lattice_incidences;
        d["poset_edges"] = s.poset_edges;
        d["lattice_edges"] = s.lattice_edges;
        return d;
      }, py::arg("table"));
  m.def("maximal_subgroups", &maximal_subgroups, py::arg("table"), py::arg("i"));

  m.def("euler_transform", [](const std::vector<std::int64_t>& c, std::size_t n) { return euler_transform(to_seq(c), n).values; },
        py::arg("c"), py::arg("n"));
  m.def("inverse_euler_transform",
        [](const std::vector<std::int64_t>& s, std::size_t n) { return inverse_euler_transform(to_seq(s), n).values; },
        py::arg("m"), py::arg("n"));
  m.def("mobius", &mobius, py::arg("n"));
  m.def("multiset_coefficient", &multiset_coefficient, py::arg("c"), py::arg("a"));

  m.def("decompose", [](const Group& h) { return decompose(h).blocks; }, py::arg("h"));
  m.def("is_connected", &is_connected, py::arg("h"));
  m.def("is_connected_partition", [](std::vector<std::uint32_t> parts) {
        std::sort(parts.rbegin(), parts.rend());
        return is_connected_partition(Partition{parts});
      }, py::arg("parts"));
  m.def("connected_partition_count", &connected_partition_count, py::arg("n"), py::arg("even_only") = false);

  m.def("report_json", [](const std::string& family, std::size_t n_max, const std::vector<std::string>& tables) {
        ReportOptions o;
        o.family = parse_family(family);
        o.n_max = n_max;
        o.tables = tables;
        return render_json(build_report(o));
      }, py::arg("family"), py::arg("n_max"), py::arg("tables") = std::vector<std::string>{});
}
