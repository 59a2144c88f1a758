#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "rcg/errors.hpp"
#include "rcg/permutation.hpp"
#include "rcg/pieri.hpp"
#include "rcg/polynomial.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/verify.hpp"

namespace py = pybind11;
using namespace rcg;

namespace {

using PairList = std::vector<std::pair<int, int>>;

pieri::Ledger to_ledger(const PairList& pairs) {
    pieri::Ledger led;
    for (const auto& [a, b] : pairs) led.pairs.push_back({a, b});
    return led;
}

PairList from_ledger(const pieri::Ledger& led) {
    PairList out;
    for (const auto& p : led.pairs) out.emplace_back(p.a, p.b);
    return out;
}

RcGraph make_graph(const PairList& cells, int window) {
    std::vector<Crossing> crossings;
    int need = std::max(window, 1);
    for (const auto& [i, j] : cells) {
        crossings.push_back({i, j});
        need = std::max(need, i + j);
    }
    return RcGraph(std::move(crossings), need);
}

PairList graph_cells(const RcGraph& d) {
    PairList out;
    for (const auto& c : d.crossings()) out.emplace_back(c.row, c.col);
    return out;
}

} // namespace

PYBIND11_MODULE(rcgraphs, m) {
    m.doc() = "RC graphs, Schubert polynomials and Pieri insertion";

    py::register_exception<GuaranteeError>(m, "GuaranteeError");
    py::register_exception<AmbiguityError>(m, "AmbiguityError");

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::vector<int>& line) {
                 return Permutation::from_one_line(line);
             }),
             py::arg("one_line"))
        .def("__call__", &Permutation::operator())
        .def("window", &Permutation::window)
        .def("trimmed_window", &Permutation::trimmed_window)
        .def("one_line",
             [](const Permutation& w) { return w.one_line(std::max(w.window(), 1)); })
        .def("length", [](const Permutation& w) { return length(w); })
        .def("inverse", [](const Permutation& w) { return inverse(w); })
        .def("__mul__", [](const Permutation& u, const Permutation& v) { return u * v; })
        .def("__eq__", [](const Permutation& u, const Permutation& v) { return u == v; })
        .def("__lt__", [](const Permutation& u, const Permutation& v) { return u < v; })
        .def("__hash__",
             [](const Permutation& w) {
                 std::size_t h = 0;
                 for (int i = 1; i <= w.trimmed_window(); ++i)
                     h = h * 1000003u + static_cast<std::size_t>(w(i));
                 return h;
             })
        .def("__repr__", [](const Permutation& w) {
            return "Permutation([" + to_one_line_string(w) + "])";
        });

    py::class_<RcGraph>(m, "RcGraph")
        .def(py::init(&make_graph), py::arg("crossings") = PairList{},
             py::arg("window") = 1)
        .def("crossings", &graph_cells)
        .def("window", &RcGraph::window)
        .def("__len__", &RcGraph::size)
        .def("__eq__", [](const RcGraph& a, const RcGraph& b) { return a == b; })
        .def("render", [](const RcGraph& d) { return render(d); })
        .def("__repr__", [](const RcGraph& d) { return serialize(d); });

    m.def("parse_permutation", &parse_one_line, py::arg("text"));
    m.def("longest_element", &longest_element, py::arg("n"));
    m.def("grassmannian_permutation", &grassmannian_permutation, py::arg("r"),
          py::arg("m"));
    m.def("reduced_words", &reduced_words, py::arg("w"));
    m.def("symmetric_group", &symmetric_group, py::arg("n"));
    m.def("lehmer_code", &lehmer_code, py::arg("w"));

    m.def("permutation_of", &permutation_of, py::arg("graph"));
    m.def("is_reduced", [](const RcGraph& d) { return is_reduced(d); },
          py::arg("graph"));
    m.def("bottom_graph", &bottom_graph, py::arg("w"));
    m.def("enumerate_rc", &enumerate_rc, py::arg("w"));
    m.def("parse_rcgraph", &parse_rcgraph, py::arg("text"));

    m.def("schubert", [](const Permutation& w) { return schubert_from_graphs(w).str(); },
          py::arg("w"), "Schubert polynomial of w as canonical text, RC backend");
    m.def("schubert_ddiff",
          [](const Permutation& w, int n) { return schubert_polynomial(w, n).str(); },
          py::arg("w"), py::arg("n"),
          "Schubert polynomial via divided differences on the S_n staircase");
    m.def("complete_homogeneous",
          [](int m, int r) { return complete_homogeneous(m, r).str(); },
          py::arg("m"), py::arg("r"));

    m.def("insert",
          [](const RcGraph& d, int r, const std::vector<int>& comp) {
              auto res = pieri::insert(d, r, Composition(comp));
              return py::make_tuple(res.graph, from_ledger(res.ledger));
          },
          py::arg("graph"), py::arg("r"), py::arg("comp"),
          "Insert comp[s-1] crossings into row s; returns (graph, ledger)");
    m.def("invert",
          [](const RcGraph& dp, const Permutation& w, int r, const PairList& ledger) {
              auto res = pieri::invert(dp, w, r, to_ledger(ledger));
              return py::make_tuple(res.graph, res.comp.parts);
          },
          py::arg("graph"), py::arg("w"), py::arg("r"), py::arg("ledger"),
          "Inverse insertion; returns (graph, comp)");
    m.def("invert",
          [](const RcGraph& dp, const Permutation& w, int r) {
              auto res = pieri::invert(dp, w, r);
              return py::make_tuple(res.graph, res.comp.parts);
          },
          py::arg("graph"), py::arg("w"), py::arg("r"));
    m.def("expand",
          [](const Permutation& w, int r, int m) {
              std::vector<std::pair<Permutation, PairList>> out;
              for (const auto& e : pieri::expand(w, r, m))
                  out.emplace_back(e.target, from_ledger(e.ledger));
              return out;
          },
          py::arg("w"), py::arg("r"), py::arg("m"),
          "Admissible (target, ledger) pairs of the product rule");

    m.def("verify_pieri",
          [](const Permutation& w, int r, int m, bool check_steps) {
              const auto a = verify::pieri_identity(w, r, m);
              const auto b = verify::insertion_bijection(w, r, m, check_steps);
              return py::make_tuple(a.passed() && b.passed(),
                                    a.text() + "\n" + b.text());
          },
          py::arg("w"), py::arg("r"), py::arg("m"), py::arg("check_steps") = false);
}
