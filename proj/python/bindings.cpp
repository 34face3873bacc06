#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phigroup/cli.hpp"
#include "phigroup/constructions.hpp"
#include "phigroup/group_io.hpp"
#include "phigroup/numtheory.hpp"
#include "phigroup/powergraph.hpp"
#include "phigroup/report.hpp"
#include "phigroup/verify.hpp"

namespace py = pybind11;
using namespace phigroup;

namespace {

py::object to_pyint(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_pyint(r.numerator()), to_pyint(r.denominator()));
}

py::object from_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

GroupLimits limits_with(std::size_t cap) {
  GroupLimits limits;
  limits.order_cap = cap;
  return limits;
}

}  // namespace

PYBIND11_MODULE(phigroup, m) {
  m.doc() = "Totient sums, power graphs and normal Sylow checks for finite groups";

  py::register_exception<GroupAxiomError>(m, "GroupAxiomError", PyExc_ValueError);
  py::register_exception<GroupSpecError>(m, "GroupSpecError", PyExc_ValueError);
  py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", PyExc_ValueError);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);

  m.def("factorize", [](std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& f : factorize(n).factors) out.emplace_back(f.prime, f.exponent);
    return out;
  }, py::arg("n"));
  m.def("totient", py::overload_cast<std::uint64_t>(&totient), py::arg("n"));
  m.def("phi_cyclic_sum", [](std::uint64_t n) { return to_pyint(phi_cyclic_sum(n)); }, py::arg("n"));
  m.def("phi_cyclic_product", [](std::uint64_t n) { return to_pyint(phi_cyclic_product(n)); }, py::arg("n"));
  m.def("q_of", [](std::uint64_t n) { return to_fraction(q_of(n)); }, py::arg("n"));

  m.def("lemma_n_geq_check", [](std::uint64_t n) {
    const NGeqCheck c = lemma_n_geq_check(n);
    py::dict d;
    d["holds"] = c.holds;
    d["equality"] = c.equality;
    d["rhs"] = to_fraction(c.rhs);
    return d;
  }, py::arg("n"));

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec, std::size_t cap) { return parse_group_spec(spec, limits_with(cap)); }),
           py::arg("spec"), py::arg("cap") = kDefaultOrderCap)
      .def_static("from_json", [](const std::string& text) { return group_from_json(text); })
      .def_static("from_table",
                  [](const std::vector<std::vector<std::int64_t>>& table, std::int64_t identity, std::string name) {
                    return FiniteGroup::from_cayley(table, identity, std::move(name));
                  },
                  py::arg("table"), py::arg("identity") = 0, py::arg("name") = "G")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("element_orders", [](const FiniteGroup& g) {
        return std::vector<std::uint64_t>(g.element_orders().begin(), g.element_orders().end());
      })
      .def("element_order", &FiniteGroup::element_order, py::arg("g"))
      .def("mul", [](const FiniteGroup& g, Element a, Element b) {
        g.require_valid(a);
        g.require_valid(b);
        return g.mul(a, b);
      })
      .def("phi", [](const FiniteGroup& g) { return phi_of_group(g); })
      .def("is_cyclic", [](const FiniteGroup& g) { return is_cyclic(g); })
      .def("sylow_subgroup", [](const FiniteGroup& g, std::uint64_t q) {
        const Subgroup h = sylow_subgroup(g, q);
        return std::vector<Element>(h.members().begin(), h.members().end());
      }, py::arg("q"))
      .def("count_sylow", &count_sylow, py::arg("q"))
      .def("to_json", &group_to_json)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("catalog", [](std::uint64_t n) { return catalog(n); }, py::arg("n"));

  m.def("power_graph", [](const FiniteGroup& g) {
    const PowerGraph pg = PowerGraph::build(g);
    py::dict d = from_json(export_json(pg));
    d["dot"] = export_dot(pg);
    return d;
  }, py::arg("group"));

  m.def("verify_main", [](std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
    if (hi == 0) hi = lo;
    return from_json(reports_json(verify_main_range(lo, hi, {}, jobs)));
  }, py::arg("n"), py::arg("hi") = 0, py::arg("jobs") = 1);

  m.def("criterion", [](const FiniteGroup& g) {
    const std::vector<CriterionReport> one{verify_criterion(g)};
    return from_json(criterion_json(one));
  }, py::arg("group"));

  m.def("tables", [] {
    const auto t2 = table2_spot_check();
    VerdictMap verdicts = table2_verdicts(t2);
    verdicts["table-1"] = verify_table1();
    return from_json(tables_json(table1(), t2, verdicts));
  });

  m.def("sweep", [](std::uint64_t limit, unsigned jobs) {
    return from_json(verdicts_json(verify_numtheory_sweep(limit, jobs)));
  }, py::arg("limit"), py::arg("jobs") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
