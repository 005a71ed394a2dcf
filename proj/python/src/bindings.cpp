#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kohnert/core.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/render.hpp"
#include "kohnert/tableaux.hpp"

namespace py = pybind11;
using namespace kohnert;

namespace {

using PyCells = std::vector<std::pair<int, int>>;

Diagram to_diagram(const PyCells& cells) {
    std::vector<Cell> v;
    for (const auto& [c, r] : cells) v.push_back({c, r});
    return Diagram(std::move(v));
}

PyCells from_diagram(const Diagram& d) {
    PyCells out;
    for (const Cell& c : d.cells()) out.push_back({c.col, c.row});
    return out;
}

py::dict trace_dict(const RectTrace& t) {
    py::list steps;
    for (const RectStep& s : t.steps) {
        py::dict step;
        step["kind"] = s.kind == RectStep::Kind::pass   ? "pass"
                       : s.kind == RectStep::Kind::bump ? "bump"
                                                        : "land";
        step["position"] = py::make_tuple(s.position.col, s.position.row);
        if (s.bumped) step["bumped"] = py::make_tuple(s.bumped->col, s.bumped->row);
        if (s.label) step["label"] = *s.label;
        steps.append(step);
    }
    py::dict out;
    out["steps"] = steps;
    out["landing"] = py::make_tuple(t.landing.col, t.landing.row);
    out["landing_column"] = t.landing_column;
    return out;
}

py::dict poly_dict(const Polynomial& p) {
    py::dict out;
    for (const auto& [e, c] : p.terms()) {
        out[py::tuple(py::cast(e))] = py::cast(c.str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_kohnert, m) {
    m.doc() = "Kohnert diagrams, Demazure characters and atoms, restricted insertion";

    m.def("composition_diagram",
          [](const Composition& a) { return from_diagram(composition_diagram(a)); });
    m.def("kohnert_move", [](const PyCells& cells, int row) -> py::object {
        auto next = kohnert_move(to_diagram(cells), row);
        if (!next) return py::none();
        return py::cast(from_diagram(*next));
    });
    m.def("kohnert_diagrams", [](const Composition& a, int budget) {
        std::vector<PyCells> out;
        for (const Diagram& d : kohnert_diagrams(a, budget)) out.push_back(from_diagram(d));
        return out;
    }, py::arg("alpha"), py::arg("budget") = -1);
    m.def("atomic_kohnert_diagrams", [](const Composition& a, int budget) {
        std::vector<PyCells> out;
        for (const Diagram& d : atomic_kohnert_diagrams(a, budget)) out.push_back(from_diagram(d));
        return out;
    }, py::arg("alpha"), py::arg("budget") = -1);
    m.def("pinned_kohnert_diagrams", [](const Composition& a, int budget) {
        std::vector<PyCells> out;
        for (const Diagram& d : pinned_kohnert_diagrams(a, budget)) out.push_back(from_diagram(d));
        return out;
    }, py::arg("alpha"), py::arg("budget") = -1);
    m.def("diagram_weight",
          [](const PyCells& cells, int length) { return diagram_weight(to_diagram(cells), length); });
    m.def("thread_decomposition", [](const PyCells& cells) {
        py::list out;
        for (const Thread& t : thread_decomposition(to_diagram(cells))) {
            py::dict d;
            PyCells tc;
            for (const Cell& c : t.cells) tc.push_back({c.col, c.row});
            d["cells"] = tc;
            d["terminal_row"] = t.terminal_row;
            out.append(d);
        }
        return out;
    });
    m.def("thread_weight",
          [](const PyCells& cells, int length) { return thread_weight(to_diagram(cells), length); });
    m.def("is_rectified", [](const PyCells& cells) { return is_rectified(to_diagram(cells)); });
    m.def("left_swap_leq", &left_swap_leq);
    m.def("pinned_swap_leq", &pinned_swap_leq);
    m.def("sort_to_partition", &sort_to_partition);
    m.def("kd_membership",
          [](const PyCells& cells, const Composition& a) { return kd_membership(to_diagram(cells), a); });
    m.def("proper_labeling", [](const PyCells& cells, const Composition& a) -> py::object {
        auto res = proper_labeling(to_diagram(cells), a);
        if (!res.ok()) return py::none();
        py::dict out;
        std::vector<std::tuple<int, int, int>> entries;
        const auto& dc = res.labeling.diagram.cells();
        for (std::size_t i = 0; i < dc.size(); ++i) {
            entries.push_back({dc[i].col, dc[i].row, res.labeling.labels[i]});
        }
        out["entries"] = entries;
        out["shape"] = res.labeling.shape;
        out["flagged"] = is_flagged(res.labeling);
        out["pinned"] = is_pinned(res.labeling);
        return out;
    });
    m.def("render_diagram", [](const PyCells& cells, int width, int height) {
        return render_diagram(to_diagram(cells), width, height);
    }, py::arg("cells"), py::arg("width") = 0, py::arg("height") = 0);

    m.def("k_addable_positions", [](const Composition& b, int k) {
        PyCells out;
        for (Cell c : k_addable_positions(b, k)) out.push_back({c.col, c.row});
        return out;
    });
    m.def("k_addition", [](const Composition& b, std::pair<int, int> pos, int k) {
        return k_addition(b, {pos.first, pos.second}, k);
    });
    m.def("insert_row", [](const PyCells& cells, const Composition& b, int k, int r) {
        InsertResult res = insert_row(to_diagram(cells), b, k, r);
        py::dict out;
        out["diagram"] = from_diagram(res.diagram);
        out["trace"] = trace_dict(res.trace);
        out["alpha_used"] = res.alpha_used;
        return out;
    });
    m.def("excise", [](const PyCells& cells, const Composition& b, int k) {
        ExciseResult res = excise(to_diagram(cells), b, k);
        return py::make_tuple(from_diagram(res.diagram), res.row);
    });
    m.def("iterated_insert",
          [](const PyCells& cells, const Composition& b, int k, const std::vector<int>& rows) {
              IteratedInsertResult run = iterated_insert(to_diagram(cells), b, k, rows);
              py::dict out;
              out["diagram"] = from_diagram(run.diagram);
              py::list chain;
              for (const KChainStep& s : run.chain) {
                  py::dict step;
                  step["added_column"] = s.added_column;
                  step["extended_row"] = s.extended_row;
                  step["before"] = s.before;
                  step["after"] = s.after;
                  chain.append(step);
              }
              out["chain"] = chain;
              out["alpha_chain"] = run.alpha_chain;
              return out;
          });

    m.def("generate_ssrt", [](const Composition& l) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const ReverseTableau& t : generate_ssrt(l)) out.push_back(t.rows);
        return out;
    });
    m.def("tableau_to_biword", [](const Composition& shape, const std::vector<std::vector<int>>& rows) {
        ReverseTableau t{shape, rows};
        return tableau_to_biword(t).pairs;
    });

    m.def("demazure_char", [](const Composition& a, int m, int budget) {
        return poly_dict(demazure_char(a, m, budget));
    }, py::arg("alpha"), py::arg("m"), py::arg("budget") = -1);
    m.def("schur", [](const Composition& l, int m) { return poly_dict(schur(l, m)); },
          py::arg("lam"), py::arg("m") = -1);
    m.def("atom_poly", [](const Composition& a, int m, int budget) {
        return poly_dict(atom_poly(a, m, budget));
    }, py::arg("alpha"), py::arg("m"), py::arg("budget") = -1);
    m.def("pinned_poly", [](const Composition& a, int m, int budget) {
        return poly_dict(pinned_poly(a, m, budget));
    }, py::arg("alpha"), py::arg("m"), py::arg("budget") = -1);
    m.def("key_to_atom", &key_to_atom);
    m.def("atom_expansion", [](const Composition& b, const Composition& l, int k) {
        py::dict out;
        for (const auto& [g, c] : atom_expansion(b, l, k)) out[py::tuple(py::cast(g))] = c;
        return out;
    }, py::arg("beta"), py::arg("lam"), py::arg("k") = -1);
    m.def("schubert_expansion", [](const Composition& b, const Composition& l, int k) {
        py::list out;
        for (const SchubertTerm& t : schubert_expansion(b, l, k)) {
            py::dict term;
            term["columns"] = t.columns;
            term["generators"] = t.ideal.generators;
            term["coefficient"] = t.coefficient;
            out.append(term);
        }
        return out;
    }, py::arg("beta"), py::arg("lam"), py::arg("k") = -1);
    m.def("signed_key_expansion",
          [](const Composition& b, const Composition& l, int k, bool grouped) {
              py::dict out;
              for (const auto& [g, c] : signed_key_expansion(b, l, k, grouped))
                  out[py::tuple(py::cast(g))] = c;
              return out;
          },
          py::arg("beta"), py::arg("lam"), py::arg("k") = -1, py::arg("grouped") = true);
    m.def("is_k_positive", &is_k_positive);
    m.def("kd_intersection", &kd_intersection);
}
