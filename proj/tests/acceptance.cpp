// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "kohnert/core.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/golden.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/tableaux.hpp"
#include "kohnert/verify.hpp"

using namespace kohnert;

namespace {

int failures = 0;
using clock_type = std::chrono::steady_clock;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double elapsed(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

Diagram threading_example() {
    return Diagram({{1, 6}, {2, 6}, {1, 5}, {2, 5}, {3, 4}, {1, 3}, {3, 3}, {4, 3}, {5, 3},
                    {1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 1}, {4, 1}, {5, 1}});
}

// 1. five diagrams, bijective lift, exact monomials
void criterion1() {
    auto t0 = clock_type::now();
    Composition alpha{0, 2, 1};
    auto kd = kohnert_diagrams(alpha);
    bool pass = kd.size() == 5;
    std::set<ReverseTableau> images;
    for (const Diagram& d : kd) images.insert(lift_to_tableau(d, alpha));
    pass = pass && images.size() == 5;
    Polynomial expected(3);
    for (Composition e : {Composition{0, 2, 1}, Composition{1, 1, 1}, Composition{2, 0, 1},
                          Composition{2, 1, 0}, Composition{1, 2, 0}}) {
        expected.add_term(e, 1);
    }
    pass = pass && demazure_char(alpha, 3) == expected;
    report(1, "five diagrams of (0,2,1) and their character", pass, elapsed(t0));
}

// 2. thread decomposition of the 16-cell example
void criterion2() {
    auto t0 = clock_type::now();
    Diagram d = threading_example();
    auto threads = thread_decomposition(d);
    bool pass = thread_weight(d, 6) == Composition{0, 5, 2, 0, 5, 4};
    pass = pass && threads.size() == 4;
    pass = pass && threads[0].cells == std::vector<Cell>{{5, 1}, {4, 1}, {3, 2}, {2, 2}, {1, 2}};
    pass = pass && threads[1].cells == std::vector<Cell>{{5, 3}, {4, 3}, {3, 3}, {2, 5}, {1, 5}};
    pass = pass && threads[2].cells == std::vector<Cell>{{4, 2}, {3, 4}, {2, 6}, {1, 6}};
    pass = pass && threads[3].cells == std::vector<Cell>{{2, 1}, {1, 3}};
    report(2, "threading of the 16-cell example", pass, elapsed(t0));
}

// 3. proper labeling construction and the pinned closure
void criterion3() {
    auto t0 = clock_type::now();
    Diagram d = threading_example();
    auto res = proper_labeling(d, {0, 2, 5, 0, 5, 4});
    bool pass = res.ok() && is_pinned(res.labeling) && is_proper_minimal(res.labeling);
    const std::map<Cell, int> construction = {
        {{5, 1}, 3}, {{5, 3}, 5},                                // column 5 panel
        {{4, 1}, 3}, {{4, 2}, 6}, {{4, 3}, 5},                   // column 4 panel
        {{3, 2}, 3}, {{3, 3}, 5}, {{3, 4}, 6},                   // column 3 panel
        {{2, 1}, 2}, {{2, 2}, 3}, {{2, 5}, 5}, {{2, 6}, 6},      // column 2 panel
        {{1, 2}, 2}, {{1, 3}, 3}, {{1, 5}, 5}, {{1, 6}, 6}};     // column 1 panel
    for (const auto& [cell, want] : construction) {
        pass = pass && res.labeling.label_of(cell) == want;
    }
    // the four drawn pinned labelings live in the closure for (0,2,4,0,5,5)
    auto closure = semi_proper_closure(d, {0, 2, 4, 0, 5, 5});
    auto member = [&](const Composition& shape, const std::map<Cell, int>& entries) {
        Labeling l;
        l.diagram = d;
        l.shape = shape;
        for (const Cell& c : d.cells()) l.labels.push_back(entries.at(c));
        return std::find(closure.begin(), closure.end(), l) != closure.end();
    };
    std::map<Cell, int> common = {{{1, 6}, 6}, {{2, 6}, 6}, {{1, 5}, 5}, {{2, 5}, 5},
                                  {{3, 4}, 6}, {{1, 3}, 3}, {{1, 2}, 2}};
    auto with = [&](std::map<Cell, int> extra) {
        extra.insert(common.begin(), common.end());
        return extra;
    };
    pass = pass && member({0, 5, 2, 0, 5, 4},
                          with({{{3, 3}, 5}, {{4, 3}, 5}, {{5, 3}, 5}, {{2, 2}, 2}, {{3, 2}, 2},
                                {{4, 2}, 6}, {{2, 1}, 3}, {{4, 1}, 2}, {{5, 1}, 2}}));
    pass = pass && member({0, 2, 5, 0, 5, 4},
                          with({{{3, 3}, 5}, {{4, 3}, 5}, {{5, 3}, 5}, {{2, 2}, 3}, {{3, 2}, 3},
                                {{4, 2}, 6}, {{2, 1}, 2}, {{4, 1}, 3}, {{5, 1}, 3}}));
    pass = pass && member({0, 2, 5, 0, 4, 5},
                          with({{{3, 3}, 5}, {{4, 3}, 6}, {{5, 3}, 6}, {{2, 2}, 3}, {{3, 2}, 3},
                                {{4, 2}, 5}, {{2, 1}, 2}, {{4, 1}, 3}, {{5, 1}, 3}}));
    pass = pass && member({0, 2, 4, 0, 5, 5},
                          with({{{3, 3}, 5}, {{4, 3}, 6}, {{5, 3}, 6}, {{2, 2}, 3}, {{3, 2}, 3},
                                {{4, 2}, 5}, {{2, 1}, 2}, {{4, 1}, 3}, {{5, 1}, 5}}));
    report(3, "labeling construction and pinned closure", pass, elapsed(t0));
}

// 4. the six 4-addable positions
void criterion4() {
    auto t0 = clock_type::now();
    auto positions = k_addable_positions({0, 1, 3, 0, 1, 2}, 4);
    std::set<Cell> got(positions.begin(), positions.end());
    bool pass = got == std::set<Cell>{{1, 4}, {2, 2}, {2, 4}, {3, 2}, {3, 4}, {4, 3}};
    report(4, "4-addable positions of (0,1,3,0,1,2)", pass, elapsed(t0));
}

void criterion5() {
    auto r = verify::check_rsk_equivalence(5, 4);
    report(5, "insertion matches tableau insertion (" + std::to_string(r.checked) + " cases)",
           r.pass, r.seconds, r.detail);
}

void criterion6() {
    verify::GridSpec g{2, 4, 4, 4};
    auto r = verify::check_invertibility(g, 4);
    report(6, "excision inverts insertion (" + std::to_string(r.checked) + " cases)", r.pass,
           r.seconds, r.detail);
}

// 7. the worked appendix runs against the committed fixtures
void criterion7() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    for (const std::string& name : {"appendixA", "appendixB"}) {
        std::ifstream in(std::string(KOHNERT_FIXTURE_DIR) + "/" + name + ".txt");
        std::stringstream buf;
        buf << in.rdbuf();
        if (!in || buf.str() != golden::artifact(name)) {
            pass = false;
            detail = name + " fixture differs";
        }
    }
    // the run data itself: chain and recovered rows
    Diagram start({{1, 1}, {3, 1}, {4, 1}, {3, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {1, 6}});
    Composition beta{1, 0, 3, 1, 0, 4};
    IteratedInsertResult run = iterated_insert(start, beta, 4, {3, 3, 1, 4, 2});
    pass = pass && run.chain.back().after == Composition{2, 0, 5, 5, 0, 2};
    Diagram u = run.diagram;
    std::vector<int> recovered;
    for (int i = 4; i >= 0; --i) {
        ExciseResult ex = excise(u, run.chain[std::size_t(i)].before, 4);
        recovered.push_back(ex.row);
        u = ex.diagram;
    }
    pass = pass && recovered == std::vector<int>{2, 4, 1, 3, 3} && u == start;
    report(7, "worked insertion and excision byte-for-byte", pass, elapsed(t0), detail);
}

// 8. decomposition identities on the parts<=3 grid
void criterion8() {
    verify::GridSpec g{3, 4, 4, 4};
    auto r = verify::check_decomposition(g);
    report(8, "decomposition identities (" + std::to_string(r.checked) + " compositions)", r.pass,
           r.seconds, r.detail);
}

// 9. the three expansions against direct multiplication
void criterion9() {
    verify::GridSpec g{2, 4, 4, 4};
    auto atom = verify::check_atom_expansion(g);
    auto schubert = verify::check_schubert_expansion(g);
    auto signed_exp = verify::check_signed_expansion(g);
    bool pass = atom.pass && schubert.pass && signed_exp.pass;
    std::string detail = !atom.pass       ? atom.detail
                         : !schubert.pass ? schubert.detail
                                          : signed_exp.detail;
    report(9,
           "product expansions on the main grid (" + std::to_string(atom.checked) + " pairs)",
           pass, atom.seconds + schubert.seconds + signed_exp.seconds, detail);
}

void criterion10() {
    auto r = verify::check_intersections(8);
    report(10, "closure intersections (" + std::to_string(r.checked) + " families)", r.pass,
           r.seconds, r.detail);
}

void criterion11() {
    verify::GridSpec g{2, 4, 4, 4};
    auto r = verify::check_counting(g);
    report(11, "bijection counting and coefficient well-definedness (" +
                   std::to_string(r.checked) + " pairs)",
           r.pass, r.seconds, r.detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
