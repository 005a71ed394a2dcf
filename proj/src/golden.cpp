#include "kohnert/golden.hpp"

#include <sstream>

#include "kohnert/core.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/render.hpp"
#include "kohnert/tableaux.hpp"

namespace kohnert::golden {

namespace {

Diagram threading_example() {
    return Diagram({{1, 6}, {2, 6}, {1, 5}, {2, 5}, {3, 4}, {1, 3}, {3, 3}, {4, 3}, {5, 3},
                    {1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 1}, {4, 1}, {5, 1}});
}

Diagram appendix_start() {
    return Diagram({{1, 1}, {3, 1}, {4, 1}, {3, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {1, 6}});
}

Diagram iterated_figure_start() {
    return Diagram({{1, 1}, {2, 1}, {3, 1}, {4, 2}, {1, 3}, {3, 3}, {1, 4}, {2, 5}, {1, 6}});
}

std::string monomial_string(const Composition& e) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << '*';
        os << 'x' << (i + 1);
        if (e[i] > 1) os << '^' << e[i];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

void print_polynomial(std::ostringstream& os, const Polynomial& p) {
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        if (c != 1) os << c.str() << '*';
        os << monomial_string(e);
        first = false;
    }
    if (first) os << '0';
    os << '\n';
}

std::string fig1() {
    std::ostringstream os;
    Composition alpha{0, 2, 1};
    os << "Kohnert diagrams for (0,2,1) with their lifted tableaux\n\n";
    auto kd = kohnert_diagrams(alpha);
    os << "count: " << kd.size() << "\n\n";
    for (const Diagram& d : kd) {
        os << render_diagram(d, 2, 3);
        os << "weight " << to_string(diagram_weight(d, 3)) << ", thread weight "
           << to_string(thread_weight(d, 3)) << '\n';
        os << render_tableau(lift_to_tableau(d, alpha));
        os << '\n';
    }
    os << "character: ";
    print_polynomial(os, demazure_char(alpha, 3));
    return os.str();
}

std::string fig3() {
    std::ostringstream os;
    Diagram d = threading_example();
    os << "Thread decomposition of the 16-cell example\n\n";
    os << render_diagram(d) << '\n';
    os << render_threads(d) << '\n';
    auto threads = thread_decomposition(d);
    for (std::size_t i = 0; i < threads.size(); ++i) {
        os << "thread " << (i + 1) << " (ends in row " << threads[i].terminal_row << "):";
        for (const Cell& c : threads[i].cells) os << ' ' << to_string(c);
        os << '\n';
    }
    os << "thread weight: " << to_string(thread_weight(d, 6)) << '\n';
    return os.str();
}

std::string fig4() {
    std::ostringstream os;
    Diagram d = threading_example();
    Composition alpha{0, 2, 5, 0, 5, 4};
    os << "Proper labeling construction for " << to_string(alpha) << "\n\n";
    // column-by-column panels, right to left
    auto res = proper_labeling(d, alpha);
    for (int c = 5; c >= 1; --c) {
        os << "columns " << c << "..5 labeled:\n";
        for (int row = 6; row >= 1; --row) {
            for (int col = 1; col <= 5; ++col) {
                if (col > 1) os << ' ';
                if (!d.contains({col, row}))
                    os << '.';
                else if (col >= c)
                    os << res.labeling.label_of({col, row});
                else
                    os << '*';
            }
            os << '\n';
        }
        os << '\n';
    }
    return os.str();
}

std::string fig5() {
    std::ostringstream os;
    Diagram d = threading_example();
    Composition alpha{0, 2, 4, 0, 5, 5};
    os << "Pinned labelings of the 16-cell example in the closure for " << to_string(alpha)
       << "\n\n";
    os << "atomic labeling (shape " << to_string(atomic_labeling(d).shape) << "):\n";
    os << render_labeling(atomic_labeling(d)) << '\n';
    auto closure = semi_proper_closure(d, alpha);
    os << "closure size: " << closure.size() << '\n';
    int shown = 0;
    for (const Labeling& l : closure) {
        if (!is_proper_minimal(l)) continue;
        os << "\nproper labeling of shape " << to_string(l.shape) << ":\n";
        os << render_labeling(l);
        ++shown;
    }
    os << "\nproper labelings shown: " << shown << '\n';
    return os.str();
}

std::string fig7() {
    std::ostringstream os;
    Diagram t = threading_example();
    Composition beta{0, 5, 2, 0, 5, 4};
    os << "Insertion of row 5 restricted by 6, against tableau insertion\n\n";
    os << "diagram:\n" << render_diagram(t) << '\n';
    ReverseTableau p = lift_to_tableau(t, beta);
    os << "lift:\n" << render_tableau(p) << '\n';
    InsertResult res = insert_row(t, beta, 6, 5);
    os << "after inserting 5:\n" << render_diagram(res.diagram) << '\n';
    auto [q, cell] = rsk_insert(p, 5);
    os << "tableau after row-inserting 5 (new cell " << to_string(cell) << "):\n"
       << render_tableau(q) << '\n';
    os << "lift of the insertion result equals the tableau insertion: "
       << (lift_columns(res.diagram, 6) == q ? "yes" : "NO") << '\n';
    return os.str();
}

std::string fig8() {
    std::ostringstream os;
    Composition beta{0, 1, 3, 0, 1, 2};
    os << "4-addable positions for " << to_string(beta) << "\n\n";
    for (Cell pos : k_addable_positions(beta, 4)) {
        os << to_string(pos) << " -> " << to_string(k_addition(beta, pos, 4)) << '\n';
    }
    return os.str();
}

void print_run(std::ostringstream& os, const Diagram& start, const Composition& beta, int k,
               const std::vector<int>& rows) {
    IteratedInsertResult run = iterated_insert(start, beta, k, rows);
    Diagram current = start;
    Composition label = beta;
    int height = 6;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << "step " << (i + 1) << ": insert row " << rows[std::size_t(i)] << " with label "
           << to_string(label) << '\n';
        auto pl = proper_labeling(current, run.alpha_chain[i]);
        os << render_labeling(pl.labeling, 6, height);
        int start_col = 1;
        for (int v : label) start_col = std::max(start_col, v + 1);
        os << "path:\n"
           << render_trace_panel(current, run.traces[i], {start_col, rows[std::size_t(i)]}, 6,
                                 height);
        const KChainStep& s = run.chain[i];
        os << "landing " << to_string(run.traces[i].landing) << ", added column "
           << s.added_column << ", extended row " << s.extended_row << ", label becomes "
           << to_string(s.after) << "\n\n";
        // replay to the next diagram
        Diagram next = current;
        for (const RectStep& step : run.traces[i].steps) {
            if (step.kind == RectStep::Kind::bump) {
                next = next.with_cell(step.position).without_cell(*step.bumped);
            } else if (step.kind == RectStep::Kind::land) {
                next = next.with_cell(step.position);
            }
        }
        current = next;
        label = s.after;
    }
    os << "final diagram:\n" << render_diagram(run.diagram, 6, height);
    os << "thread weight: " << to_string(thread_weight(run.diagram, int(beta.size()))) << '\n';
}

std::string fig9() {
    std::ostringstream os;
    os << "Iterated insertion of rows 3,3,1,4,2 restricted by 4\n\n";
    Diagram start = iterated_figure_start();
    Composition beta{1, 0, 3, 1, 0, 4};
    os << "start:\n" << render_diagram(start, 6, 6) << '\n';
    print_run(os, start, beta, 4, {3, 3, 1, 4, 2});
    return os.str();
}

std::string recording_text(const Diagram& start, const Composition& beta) {
    std::ostringstream os;
    ReverseTableau r;
    r.shape = {0, 0, 2, 3};
    r.rows = {{}, {}, {3, 1}, {4, 3, 2}};
    TwoLineArray biword = tableau_to_biword(r);
    os << "insertion tableau:\n" << render_tableau(r) << '\n';
    os << "two-line array:";
    for (const auto& [q, row] : biword.pairs) os << "  (" << q << "," << row << ")";
    os << "\n\n";
    std::vector<int> rows;
    for (const auto& [q, row] : biword.pairs) rows.push_back(row);
    IteratedInsertResult run = iterated_insert(start, beta, 4, rows);
    os << "insertion diagram:\n" << render_diagram(run.diagram, 6, 6) << '\n';
    SkewTableau atomic = record(run, beta, 4, biword);
    os << "atomic recording tableau (shape " << to_string(atomic.ambient) << "/"
       << to_string(beta) << "):\n";
    os << render_skew(atomic) << '\n';
    SkewTableau key = atomic_to_key(atomic);
    os << "key recording tableau (shape " << to_string(key.ambient) << "/" << to_string(beta)
       << "):\n";
    os << render_skew(key);
    os << "atomic: " << (is_atomic(atomic) ? "yes" : "NO")
       << ", lattice: " << (is_lattice(atomic) ? "yes" : "NO")
       << ", key image valid: " << (is_key(key) ? "yes" : "NO") << '\n';
    return os.str();
}

std::string fig10() {
    std::ostringstream os;
    os << "Recording tableaux for the iterated-insertion example\n\n";
    os << recording_text(iterated_figure_start(), {1, 0, 3, 1, 0, 4});
    return os.str();
}

std::string appendix_a() {
    std::ostringstream os;
    os << "Worked 4-insertion of rows 3,3,1,4,2\n\n";
    Diagram start = appendix_start();
    Composition beta{1, 0, 3, 1, 0, 4};
    os << "start:\n" << render_diagram(start, 6, 6) << '\n';
    print_run(os, start, beta, 4, {3, 3, 1, 4, 2});
    os << '\n' << recording_text(start, beta);
    return os.str();
}

std::string appendix_b() {
    std::ostringstream os;
    os << "Reversing the iterated insertion by excision\n\n";
    Diagram start = iterated_figure_start();
    Composition beta{1, 0, 3, 1, 0, 4};
    IteratedInsertResult run = iterated_insert(start, beta, 4, {3, 3, 1, 4, 2});
    Diagram u = run.diagram;
    os << "final diagram:\n" << render_diagram(u, 6, 6) << '\n';
    for (int i = int(run.chain.size()) - 1; i >= 0; --i) {
        ExciseResult ex = excise(u, run.chain[std::size_t(i)].before, 4);
        os << "excise with label " << to_string(run.chain[std::size_t(i)].before)
           << ": removed row " << ex.row << '\n';
        os << render_diagram(ex.diagram, 6, 6) << '\n';
        u = ex.diagram;
    }
    os << "recovered rows in reverse order: 2,4,1,3,3\n";
    os << "starting diagram recovered: " << (u == start ? "yes" : "NO") << '\n';
    return os.str();
}

}  // namespace

std::vector<std::string> artifact_names() {
    return {"fig1", "fig3", "fig4", "fig5", "fig7", "fig8", "fig9", "fig10", "appendixA", "appendixB"};
}

std::string artifact(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig3") return fig3();
    if (name == "fig4") return fig4();
    if (name == "fig5") return fig5();
    if (name == "fig7") return fig7();
    if (name == "fig8") return fig8();
    if (name == "fig9") return fig9();
    if (name == "fig10") return fig10();
    if (name == "appendixA") return appendix_a();
    if (name == "appendixB") return appendix_b();
    throw std::invalid_argument("unknown golden artifact: " + name);
}

}  // namespace kohnert::golden
