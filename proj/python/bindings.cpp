#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "mhbez/analysis.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/io.hpp"
#include "mhbez/optimizer.hpp"
#include "mhbez/reduction.hpp"

namespace py = pybind11;
using namespace mhbez;

namespace {

py::object to_py(const BigNat& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& r) {
    return py::module_::import("fractions")
        .attr("Fraction")(to_py(BigNat(boost::multiprecision::numerator(r))),
                          to_py(BigNat(boost::multiprecision::denominator(r))));
}

Rational from_py_rational(const py::object& obj) {
    auto fraction = py::module_::import("fractions").attr("Fraction")(obj);
    return Rational(BigNat(py::str(fraction.attr("numerator")).cast<std::string>()),
                    BigNat(py::str(fraction.attr("denominator")).cast<std::string>()));
}

py::dict to_py(const MinimizationResult& r) {
    py::dict d;
    d["value"] = to_py(r.value);
    d["argmin"] = r.argmin;
    d["partitions_examined"] = r.partitions_examined;
    d["exact"] = r.exact;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-homogeneous Bezout numbers, partition search and hardness gadgets";

    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<SearchGuardError>(m, "SearchGuardError", PyExc_RuntimeError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Support>(m, "Support")
        .def(py::init<std::size_t, std::vector<ExponentVector>>(), py::arg("n"), py::arg("monomials"))
        .def_property_readonly("n", &Support::variables)
        .def_property_readonly("monomials", &Support::monomials)
        .def("__len__", &Support::size)
        .def("__contains__", [](const Support& s, const ExponentVector& a) { return s.contains(a); })
        .def("__eq__", [](const Support& a, const Support& b) { return a == b; })
        .def("to_text", [](const Support& s) {
            std::ostringstream os;
            write_support(os, s);
            return os.str();
        });

    m.def("parse_support", [](const std::string& text) {
        std::istringstream in(text);
        return read_support(in);
    });
    m.def("read_support", &read_support_file, py::arg("path"));

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::size_t, std::vector<Partition::Block>>(), py::arg("n"), py::arg("blocks"),
             "Blocks use 0-based indices.")
        .def_property_readonly("n", &Partition::ground_size)
        .def_property_readonly("blocks", &Partition::blocks)
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });
    m.def("parse_partition", &parse_partition, py::arg("text"), py::arg("n"),
          "Parse the 1-based grammar, e.g. '1,2|3'.");

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t, const std::vector<Graph::Edge>&>(), py::arg("vertices"), py::arg("edges"),
             "Edges use 0-based vertex indices.")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges);
    m.def("read_graph", &read_graph_file, py::arg("path"));
    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("cartesian_product", &cartesian_product);
    m.def("clique_support", &clique_support);
    m.def("power_support", &power_support, py::arg("support"), py::arg("l"), py::arg("cap") = kDefaultPowerCap);
    m.def("eigenvalue_support", &eigenvalue_support);
    m.def("is_three_colorable", [](const Graph& g) {
        auto r = is_three_colorable(g);
        return py::make_tuple(r.colorable, r.witness);
    });
    m.def("balanced_coloring_check", &balanced_coloring_check);

    m.def("multinomial", [](unsigned total, const std::vector<unsigned>& parts) {
        return to_py(multinomial(total, parts));
    });
    m.def("bezout_equal_support", [](const Support& a, const Partition& p) {
        return to_py(bezout_equal_support(a, p));
    });
    m.def("bezout_general", [](const std::vector<Support>& rows, const Partition& p) {
        return to_py(bezout_general(SupportSystem(rows.size(), rows), p));
    });
    m.def("degree_matrix", [](const std::vector<Support>& rows, const Partition& p) {
        return degree_matrix(SupportSystem(rows.size(), rows), p).entries;
    });

    m.def("min_bezout_exact", [](const Support& a, unsigned workers) {
        std::optional<MinimizationResult> r;
        {
            py::gil_scoped_release release;
            r = min_bezout_exact(a, workers);
        }
        return to_py(*r);
    }, py::arg("support"), py::arg("workers") = 1);
    m.def("local_search_min", [](const Support& a, std::uint64_t seed, unsigned restarts) {
        return to_py(local_search_min(a, seed, restarts));
    }, py::arg("support"), py::arg("seed"), py::arg("restarts"));

    m.def("b_abstraction", [](unsigned n, const std::vector<unsigned>& a) { return to_py(b_abstraction(n, a)); });
    m.def("gap_min_ratio", [](unsigned n) {
        const auto report = gap_check(n);
        return py::make_tuple(report.holds(), to_py(report.min_unbalanced_ratio()));
    }, "(holds, smallest ratio over unbalanced block sizes)");
    m.def("stirling_g", &stirling_g, py::arg("n"), py::arg("x"));
    m.def("stirling_h", &stirling_h, py::arg("x"));
    m.def("n_zero", &n_zero, py::arg("x"));
    m.def("case_constants", [] {
        const auto c = case_constants();
        return py::make_tuple(c.case1, c.case2, c.case3);
    });
    m.def("table1", [] {
        py::list rows;
        for (const auto& r : reproduce_table1()) {
            py::dict d;
            d["n"] = r.n;
            d["a"] = r.a;
            d["value"] = to_py(r.value);
            d["balanced_value"] = to_py(r.balanced_value);
            d["ratio"] = to_py(r.ratio);
            d["matches_published"] = r.matches_published();
            rows.append(d);
        }
        return rows;
    });

    m.def("gadget_denominator", [](unsigned n, unsigned l) { return to_py(gadget_denominator(n, l)); });
    m.def("repetitions_for_factor", [](const py::object& c) { return repetitions_for_factor(from_py_rational(c)); });
    m.def("decide_three_coloring", [](const Graph& g, const py::object& c, unsigned workers) {
        const auto cfg = ReductionConfig::with_exact_oracle(from_py_rational(c), workers);
        const auto out = decide_three_coloring(g, cfg);
        return py::make_tuple(out.yes, to_py(out.rho));
    }, py::arg("graph"), py::arg("C"), py::arg("workers") = 1,
       "Exact-oracle reduction; returns (yes, rho).");
}
