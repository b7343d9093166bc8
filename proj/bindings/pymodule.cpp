#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kromatic/classical.hpp"
#include "kromatic/engines.hpp"
#include "kromatic/graph.hpp"
#include "kromatic/kbases.hpp"
#include "kromatic/poset.hpp"
#include "kromatic/ptableaux.hpp"
#include "kromatic/serialize.hpp"
#include "kromatic/series.hpp"
#include "kromatic/table1.hpp"

namespace py = pybind11;
using namespace kromatic;

namespace {

Partition to_partition(const std::vector<int>& parts) {
    return Partition::from_unsorted(parts);
}

std::vector<int> from_partition(const Partition& la) { return la.parts(); }

// cached constructors leak one reference on purpose: a static py::object would be
// destroyed after the interpreter has finalized and crash at shutdown
py::object to_fraction(const Rat& r) {
    static auto* ctor = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*ctor)(py::str(r.get_str()));
}

py::object to_pyint(const Int& n) {
    static auto* ctor = new py::object(py::module_::import("builtins").attr("int"));
    return (*ctor)(py::str(n.get_str()));
}

py::dict coeffs_to_dict(const Coeffs& c) {
    py::dict out;
    for (const auto& [la, v] : c) out[py::tuple(py::cast(la.parts()))] = to_fraction(v);
    return out;
}

py::dict expansion_to_dict(const Expansion& ex) {
    py::dict out;
    for (const auto& [la, v] : ex) out[py::tuple(py::cast(la.parts()))] = to_pyint(v);
    return out;
}

BasisId parse_basis(const std::string& s) {
    auto b = basis_from_string(s);
    if (!b) throw std::invalid_argument("unknown basis id: " + s);
    return *b;
}

Series compute_kromatic(const WeightedGraph& wg, const std::string& engine, int degree) {
    int cap = degree >= 0 ? degree : wg.total_weight() + 3;
    if (engine == "direct") return kromatic_direct(wg, cap);
    if (engine == "covers") return realize_expansion(kromatic_covers_truncated(wg, cap), cap);
    if (engine == "delcon") return realize_expansion(kromatic_delcon(wg), cap).truncated(cap);
    throw std::invalid_argument("unknown engine: " + engine);
}

py::dict expand_series(const Series& f, const std::string& basis) {
    BasisId b = parse_basis(basis);
    if (is_classical(b)) return coeffs_to_dict(convert_classical(f, b));
    if (b == BasisId::dualGrothS)
        throw std::invalid_argument("expansion over the dual Grothendieck family is unsupported");
    if (b == BasisId::grothS) {
        Coeffs out;
        for (int d = 0; d <= f.degree_cap(); ++d)
            for (const auto& la : partitions_of(d)) {
                Rat c = groth_coefficient(f, la);
                if (c != 0) out[la] = c;
            }
        return coeffs_to_dict(out);
    }
    auto gen = [b](const Partition& la, int cap) { return family_series(b, la, cap); };
    return coeffs_to_dict(expand_filtered(f, gen));
}

}  // namespace

PYBIND11_MODULE(_kromatic, m) {
    m.doc() = "Exact engines for the K-theoretic chromatic symmetric function";

    py::class_<Series>(m, "Series")
        .def(py::init<int, bool>(), py::arg("degree_cap"), py::arg("exact") = false)
        .def_property_readonly("degree_cap", &Series::degree_cap)
        .def_property_readonly("exact", &Series::exact)
        .def("terms",
             [](const Series& f) {
                 py::dict out;
                 for (const auto& [la, c] : f.terms())
                     out[py::tuple(py::cast(la.parts()))] = to_fraction(c);
                 return out;
             })
        .def("coeff",
             [](const Series& f, const std::vector<int>& la) {
                 return to_fraction(f.coeff(to_partition(la)));
             })
        .def("add_term",
             [](Series& f, const std::vector<int>& la, const std::string& c) {
                 f.add_term(to_partition(la), Rat(c));
             })
        .def("max_degree", &Series::max_degree)
        .def("degree_part", &Series::degree_part)
        .def("truncated", &Series::truncated)
        .def("to_json", [](const Series& f) { return series_to_json(f).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return series_from_json(json::parse(text)); })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__mul__", [](const Series& f, const Series& g) { return multiply(f, g); })
        .def("__repr__", [](const Series& f) {
            return "<Series cap=" + std::to_string(f.degree_cap()) +
                   (f.exact() ? " exact" : "") + " terms=" + std::to_string(f.terms().size()) +
                   ">";
        });

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<int>& weights) {
                 Graph g(n, edges);
                 return weights.empty() ? WeightedGraph(g) : WeightedGraph(g, weights);
             }),
             py::arg("n"), py::arg("edges"), py::arg("weights") = std::vector<int>{})
        .def_property_readonly("n", [](const WeightedGraph& wg) { return wg.g.n; })
        .def_property_readonly("edges", [](const WeightedGraph& wg) { return wg.g.edge_list(); })
        .def_property_readonly("weights", [](const WeightedGraph& wg) { return wg.w; })
        .def("total_weight", &WeightedGraph::total_weight)
        .def("is_claw_free", [](const WeightedGraph& wg) { return is_claw_free(wg.g); })
        .def("to_json", [](const WeightedGraph& wg) { return graph_to_json(wg).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return graph_from_json(json::parse(text)); })
        .def(py::self == py::self)
        .def("__repr__", [](const WeightedGraph& wg) {
            return "<Graph n=" + std::to_string(wg.g.n) +
                   " edges=" + std::to_string(wg.g.edge_count()) + ">";
        });

    py::class_<Poset>(m, "Poset")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& less) {
                 return Poset::from_relations(n, less);
             }),
             py::arg("n"), py::arg("less"))
        .def_property_readonly("n", [](const Poset& p) { return p.n; })
        .def_property_readonly("relations", &Poset::relations)
        .def("less", &Poset::less)
        .def("is_31_free", [](const Poset& p) { return is_31_free(p); })
        .def("incomparability_graph",
             [](const Poset& p) { return WeightedGraph(incomparability_graph(p)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Poset& p) {
            return "<Poset n=" + std::to_string(p.n) +
                   " relations=" + std::to_string(p.relations().size()) + ">";
        });

    m.def("named_graph", &named_graph, py::arg("spec"),
          "Fixture graph by name, e.g. 'path:3', 'table1:4', 'ex2G'");
    m.def("named_poset", &named_poset, py::arg("spec"),
          "Fixture poset by name, e.g. 'chain:3', '2+1', '3+1'");

    m.def("chromatic", [](const WeightedGraph& wg) { return chromatic_sym(wg, wg.total_weight()); },
          py::arg("graph"), "Chromatic symmetric function (exact, homogeneous)");
    m.def("kromatic", &compute_kromatic, py::arg("graph"), py::arg("engine") = "covers",
          py::arg("degree") = -1,
          "Kromatic symmetric function truncated at `degree` (default total weight + 3); "
          "engine is one of covers, delcon, direct");
    m.def("covers_expansion",
          [](const WeightedGraph& wg) { return expansion_to_dict(kromatic_covers(wg)); },
          py::arg("graph"), "Finite K-monomial expansion via the cover engine");
    m.def("delcon_expansion",
          [](const WeightedGraph& wg) { return expansion_to_dict(kromatic_delcon(wg)); },
          py::arg("graph"), "Finite K-monomial expansion via the five-term recursion");
    m.def("kromatic_equal", &kromatic_equal, py::arg("a"), py::arg("b"),
          "Exact equality of the full Kromatic series of two graphs");

    m.def("family_series",
          [](const std::string& basis, const std::vector<int>& la, int degree) {
              return family_series(parse_basis(basis), to_partition(la), degree);
          },
          py::arg("basis"), py::arg("partition"), py::arg("degree"),
          "Monomial form of one basis-family member");
    m.def("generator",
          [](const std::string& basis, const std::vector<int>& la, int degree) {
              return generator(parse_basis(basis), to_partition(la), degree);
          },
          py::arg("basis"), py::arg("partition"), py::arg("degree"));
    m.def("expand", &expand_series, py::arg("series"), py::arg("basis"),
          "Expansion coefficients of a truncated series over the given basis family");
    m.def("hall_inner",
          [](const Series& f, const Series& g) { return to_fraction(hall_inner(f, g)); },
          py::arg("f"), py::arg("g"));
    m.def("groth_coefficient",
          [](const Series& f, const std::vector<int>& la) {
              return to_fraction(groth_coefficient(f, to_partition(la)));
          },
          py::arg("series"), py::arg("partition"));

    m.def("count_p_tableaux",
          [](const Poset& p, const std::vector<int>& la) {
              return static_cast<long long>(enumerate_p_tableaux(p, to_partition(la)).size());
          },
          py::arg("poset"), py::arg("shape"));
    m.def("verify_theorem",
          [](const Poset& p, const std::vector<int>& la) {
              TheoremCheck tc = verify_theorem(p, to_partition(la));
              py::dict out;
              out["signed_sum"] = to_pyint(tc.signed_sum);
              out["tableau_count"] = to_pyint(tc.tableau_count);
              out["groth_coeff"] = to_fraction(tc.groth_coeff);
              out["all_equal"] = tc.all_equal;
              return out;
          },
          py::arg("poset"), py::arg("shape"),
          "Signed P-array sum vs tableau count vs Grothendieck coefficient");

    m.def("check_table1",
          []() {
              Table1Result r = check_table1(load_json_file(default_golden_path()));
              static auto* loads = new py::object(py::module_::import("json").attr("loads"));
              return py::make_tuple(r.pass, (*loads)(py::str(r.report.dump())));
          },
          "Recompute the reference expansion table; returns (pass, report)");

    m.def("trees",
          [](int max_n) {
              std::vector<WeightedGraph> out;
              for (const Graph& t : trees_up_to(max_n)) out.emplace_back(t);
              return out;
          },
          py::arg("max_n"), "All trees with up to max_n vertices, one per isomorphism class");
}
