#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "interlace/check.hpp"
#include "interlace/delta.hpp"
#include "interlace/error.hpp"
#include "interlace/eulerian.hpp"
#include "interlace/interlace_polys.hpp"
#include "interlace/isotropic.hpp"
#include "interlace/plane.hpp"

namespace py = pybind11;
using namespace interlace;

namespace {

py::int_ big_to_py(const BigInt& value) {
    std::string digits = value.get_str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict poly1_to_dict(const IntPoly1& p) {
    py::dict out;
    for (const auto& [k, c] : p.terms()) out[py::int_(k)] = big_to_py(c);
    return out;
}

py::dict poly2_to_dict(const IntPoly2& p) {
    py::dict out;
    for (const auto& [ij, c] : p.terms())
        out[py::make_tuple(ij.first, ij.second)] = big_to_py(c);
    return out;
}

Graph build_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                  const std::vector<std::size_t>& loops) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (std::size_t v : loops) g.set_loop(v, true);
    return g;
}

SetSystem build_system(std::size_t n, const std::vector<std::vector<std::size_t>>& feasible) {
    std::vector<uint64_t> fam;
    fam.reserve(feasible.size());
    for (const auto& f : feasible) {
        uint64_t mask = 0;
        for (std::size_t e : f) {
            if (e >= n) throw InvalidIndexError("element out of range");
            mask |= uint64_t{1} << e;
        }
        fam.push_back(mask);
    }
    return SetSystem::with_numbered_ground(n, std::move(fam));
}

std::vector<std::vector<std::size_t>> family_to_lists(const SetSystem& s) {
    std::vector<std::vector<std::size_t>> out;
    for (uint64_t f : s.feasible()) {
        std::vector<std::size_t> set;
        for (std::size_t e = 0; e < s.ground_size(); ++e)
            if ((f >> e) & 1) set.push_back(e);
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact interlace, Martin, Tutte-Martin and delta-matroid polynomials";

    py::register_exception<Error>(m, "InterlaceError");

    m.def(
        "q_nullity",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           const std::vector<std::size_t>& loops, const std::string& method) {
            Graph g = build_graph(n, edges, loops);
            if (method == "recursive")
                return poly1_to_dict(g.is_simple() ? q_nullity_recursive(g)
                                                   : q_nullity_looped(g));
            return poly1_to_dict(q_nullity_statesum(g));
        },
        py::arg("n"), py::arg("edges"), py::arg("loops") = std::vector<std::size_t>{},
        py::arg("method") = "statesum",
        "One-variable interlace polynomial as {exponent: coefficient}.");

    m.def(
        "q_twovar",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           const std::vector<std::size_t>& loops, const std::string& method) {
            Graph g = build_graph(n, edges, loops);
            return poly2_to_dict(method == "recursive" ? q_twovar_recursive(g)
                                                       : q_twovar_statesum(g));
        },
        py::arg("n"), py::arg("edges"), py::arg("loops") = std::vector<std::size_t>{},
        py::arg("method") = "statesum",
        "Two-variable interlace polynomial as {(i, j): coefficient}.");

    m.def(
        "q_global",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           const std::string& method) {
            Graph g = build_graph(n, edges, {});
            return poly1_to_dict(method == "recursive" ? Q_recursive(g) : Q_statesum(g));
        },
        py::arg("n"), py::arg("edges"), py::arg("method") = "statesum",
        "Q polynomial of a simple graph as {exponent: coefficient}.");

    m.def(
        "martin_directed",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
            return poly1_to_dict(martin_directed(TwoInTwoOutDigraph::from_arcs(n, arcs)));
        },
        py::arg("n"), py::arg("arcs"),
        "Martin polynomial of a two-in two-out digraph.");

    m.def(
        "martin_undirected",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            return poly1_to_dict(martin_undirected(FourRegularGraph::from_edges(n, edges)));
        },
        py::arg("n"), py::arg("edges"), "Martin polynomial of a 4-regular multigraph.");

    m.def(
        "euler_circuit_count",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
            return count_euler_circuits_backtracking(TwoInTwoOutDigraph::from_arcs(n, arcs));
        },
        py::arg("n"), py::arg("arcs"),
        "Number of Eulerian circuits of a connected two-in two-out digraph.");

    m.def(
        "interlace_graph_of_word",
        [](const std::vector<std::size_t>& word) {
            auto [d, part] = digraph_from_word(word);
            Graph h = interlace_graph(d.host(), part);
            return h.edges();
        },
        py::arg("word"),
        "Edges of the interlace graph of a double occurrence word.");

    m.def(
        "tutte",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            return poly2_to_dict(tutte(MultiGraph{n, edges}));
        },
        py::arg("n"), py::arg("edges"),
        "Tutte polynomial of a multigraph as {(i, j): coefficient}.");

    m.def(
        "tm_graphic",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           bool global) {
            Graph g = build_graph(n, edges, {});
            klein::KVec a = presentation_all(n, klein::kX);
            klein::KVec b = presentation_all(n, klein::kY);
            IsotropicSystem s = from_graphic_presentation(g, a, b);
            return poly1_to_dict(global ? global_tm(s) : restricted_tm(s, a ^ b));
        },
        py::arg("n"), py::arg("edges"), py::arg("global_") = false,
        "Tutte-Martin polynomial of the default graphic presentation.");

    m.def(
        "adjacency_delta_matroid",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
           const std::vector<std::size_t>& loops) {
            return family_to_lists(adjacency_delta_matroid(build_graph(n, edges, loops)));
        },
        py::arg("n"), py::arg("edges"), py::arg("loops") = std::vector<std::size_t>{},
        "Feasible sets of the adjacency delta-matroid.");

    m.def(
        "q_delta",
        [](std::size_t n, const std::vector<std::vector<std::size_t>>& feasible) {
            return poly1_to_dict(q_delta(build_system(n, feasible)));
        },
        py::arg("n"), py::arg("feasible"),
        "Interlace polynomial of a set system as {exponent: coefficient}.");

    m.def(
        "q_delta_global",
        [](std::size_t n, const std::vector<std::vector<std::size_t>>& feasible) {
            return poly1_to_dict(q_delta_global(build_system(n, feasible)));
        },
        py::arg("n"), py::arg("feasible"), "Global interlace polynomial of a set system.");

    m.def(
        "symmetric_exchange",
        [](std::size_t n, const std::vector<std::vector<std::size_t>>& feasible) {
            return symmetric_exchange_check(build_system(n, feasible));
        },
        py::arg("n"), py::arg("feasible"),
        "Whether the family satisfies the symmetric exchange axiom.");

    m.def(
        "run_checks",
        [](const std::string& suite, uint64_t seed, std::size_t max_n, std::size_t trials) {
            CheckConfig cfg;
            cfg.seed = seed;
            cfg.max_n = max_n;
            cfg.trials = trials;
            auto results = run_checks(suite, cfg);
            bool ok = true;
            for (const auto& s : results) ok = ok && s.ok();
            return py::make_tuple(ok, report_string(results));
        },
        py::arg("suite") = "all", py::arg("seed") = 1, py::arg("max_n") = 0,
        py::arg("trials") = 0,
        "Run a cross-validation suite; returns (ok, report).");
}
