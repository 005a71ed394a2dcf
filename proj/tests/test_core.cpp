#include "doctest.h"

#include <algorithm>
#include <set>

#include "kohnert/core.hpp"
#include "kohnert/labeling.hpp"
#include "test_helpers.hpp"

using namespace kohnert;
using kt::diag;

TEST_CASE("composition diagram") {
    CHECK(composition_diagram({0, 2, 1}) == diag({{1, 2}, {2, 2}, {1, 3}}));
    CHECK(composition_diagram({0, 0, 0}).empty());
    Diagram d = composition_diagram({1, 0, 3, 1, 0, 2});
    CHECK(d.size() == 7);
    CHECK(d == diag({{1, 1}, {1, 3}, {2, 3}, {3, 3}, {1, 4}, {1, 6}, {2, 6}}));
}

TEST_CASE("kohnert move") {
    Diagram d = composition_diagram({0, 2, 1});
    auto m = kohnert_move(d, 2);
    REQUIRE(m.has_value());
    CHECK(*m == diag({{1, 2}, {2, 1}, {1, 3}}));
    CHECK(!kohnert_move(d, 1).has_value());

    // jump lands at the first vacancy below
    auto j = kohnert_move(diag({{1, 3}, {1, 1}}), 3);
    REQUIRE(j.has_value());
    CHECK(*j == diag({{1, 2}, {1, 1}}));

    // blocked to the floor
    CHECK(!kohnert_move(diag({{1, 2}, {1, 1}}), 2).has_value());
}

TEST_CASE("kohnert closure for (0,2,1)") {
    auto kd = kohnert_diagrams({0, 2, 1});
    CHECK(kd.size() == 5);
    std::set<Diagram> got(kd.begin(), kd.end());
    std::set<Diagram> want = {
        diag({{1, 2}, {2, 2}, {1, 3}}), diag({{1, 2}, {2, 1}, {1, 3}}),
        diag({{1, 1}, {2, 1}, {1, 3}}), diag({{1, 1}, {2, 1}, {1, 2}}),
        diag({{1, 1}, {1, 2}, {2, 2}})};
    CHECK(got == want);
}

TEST_CASE("kohnert closure edge cases") {
    auto kd = kohnert_diagrams({0, 0});
    REQUIRE(kd.size() == 1);
    CHECK(kd[0].empty());
    CHECK_THROWS_AS(kohnert_diagrams({13, 0}), budget_error);
}

TEST_CASE("weight") {
    CHECK(diagram_weight(diag({{1, 2}, {2, 1}, {1, 3}}), 3) == Composition{1, 1, 1});
    CHECK(diagram_weight(Diagram{}, 4) == Composition{0, 0, 0, 0});
    for (Composition a : {Composition{0, 2, 1}, Composition{3, 0, 1}}) {
        CHECK(diagram_weight(composition_diagram(a), int(a.size())) == a);
    }
    CHECK_THROWS(diagram_weight(diag({{1, 3}}), 2));
}

TEST_CASE("thread decomposition of the big example") {
    Diagram d = kt::big_example_diagram();
    auto threads = thread_decomposition(d);
    REQUIRE(threads.size() == 4);
    CHECK(threads[0].cells == std::vector<Cell>{{5, 1}, {4, 1}, {3, 2}, {2, 2}, {1, 2}});
    CHECK(threads[0].terminal_row == 2);
    CHECK(threads[1].cells == std::vector<Cell>{{5, 3}, {4, 3}, {3, 3}, {2, 5}, {1, 5}});
    CHECK(threads[1].terminal_row == 5);
    CHECK(threads[2].cells == std::vector<Cell>{{4, 2}, {3, 4}, {2, 6}, {1, 6}});
    CHECK(threads[2].terminal_row == 6);
    CHECK(threads[3].cells == std::vector<Cell>{{2, 1}, {1, 3}});
    CHECK(threads[3].terminal_row == 3);
    CHECK(thread_weight(d, 6) == Composition{0, 5, 2, 0, 5, 4});
}

TEST_CASE("threading basics") {
    auto single = thread_decomposition(diag({{1, 1}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].cells.size() == 1);

    // composition diagrams thread along their rows
    CHECK(thread_weight(composition_diagram({0, 1, 2}), 3) == Composition{0, 1, 2});

    CHECK(is_rectified(composition_diagram({2, 0, 1})));
    CHECK(!is_rectified(diag({{2, 1}})));
}

TEST_CASE("closure members are rectified with conserved weight") {
    for (const auto& a : kt::all_compositions(4, 3)) {
        if (total(a) > 7) continue;
        for (const Diagram& d : kohnert_diagrams(a)) {
            CHECK(total(diagram_weight(d, int(a.size()))) == total(a));
            CHECK(is_rectified(d));
            CHECK(left_swap_leq(thread_weight(d, int(a.size())), a));
        }
    }
}

TEST_CASE("left swap orders") {
    CHECK(left_swap_leq({0, 5, 2, 0, 5, 4}, {0, 2, 5, 0, 5, 4}));
    CHECK(pinned_swap_leq({0, 5, 2, 0, 5, 4}, {0, 2, 5, 0, 5, 4}));
    CHECK(left_swap_leq({0, 2, 1}, {0, 2, 1}));
    CHECK(left_swap_leq({1, 0}, {0, 1}));
    CHECK(!pinned_swap_leq({1, 0}, {0, 1}));
    CHECK_THROWS(left_swap_leq({1, 0}, {1, 0, 0}));
}

TEST_CASE("order laws on a small universe") {
    auto univ = kt::all_compositions(3, 3);
    for (const auto& a : univ) {
        CHECK(left_swap_leq(a, a));
        CHECK(pinned_swap_leq(a, a));
        for (const auto& b : univ) {
            if (pinned_swap_leq(a, b)) CHECK(left_swap_leq(a, b));
            if (left_swap_leq(a, b) && left_swap_leq(b, a)) CHECK(a == b);
            for (const auto& c : univ) {
                if (left_swap_leq(a, b) && left_swap_leq(b, c)) CHECK(left_swap_leq(a, c));
                if (pinned_swap_leq(a, b) && pinned_swap_leq(b, c)) CHECK(pinned_swap_leq(a, c));
            }
        }
    }
}

TEST_CASE("atomic diagrams of (0,2,1)") {
    auto akd = atomic_kohnert_diagrams({0, 2, 1});
    REQUIRE(akd.size() == 2);
    std::set<Diagram> got(akd.begin(), akd.end());
    CHECK(got.count(composition_diagram({0, 2, 1})));
    CHECK(got.count(diag({{1, 2}, {2, 1}, {1, 3}})));
}

TEST_CASE("disjoint atomic decomposition") {
    for (const auto& b : kt::all_compositions(4, 3)) {
        if (total(b) > 6) continue;
        auto kd = kohnert_diagrams(b);
        std::set<Diagram> seen;
        std::size_t count = 0;
        for (const auto& a : left_swap_down_set(b)) {
            for (const Diagram& d : atomic_kohnert_diagrams(a)) {
                CHECK(seen.insert(d).second);
                ++count;
            }
        }
        CHECK(count == kd.size());
        CHECK(seen == std::set<Diagram>(kd.begin(), kd.end()));
    }
}

TEST_CASE("rectified membership is a thread weight comparison") {
    for (const auto& b : kt::all_compositions(3, 2)) {
        if (total(b) > 5) continue;
        for (const Diagram& t : kohnert_diagrams(b)) {
            Composition th = thread_weight(t, int(b.size()));
            for (const auto& a : kt::all_compositions(3, 3)) {
                if (total(a) != total(b)) continue;
                CHECK(kd_membership(t, a) == left_swap_leq(th, a));
            }
        }
    }
}

TEST_CASE("pinned diagrams decompose into atoms below the pinned order") {
    for (const auto& a : kt::all_compositions(3, 3)) {
        if (total(a) > 6) continue;
        std::set<Diagram> pkd;
        for (const Diagram& d : pinned_kohnert_diagrams(a)) pkd.insert(d);
        std::set<Diagram> expect;
        for (const auto& ap : pinned_swap_down_set(a)) {
            for (const Diagram& d : atomic_kohnert_diagrams(ap)) expect.insert(d);
        }
        CHECK(pkd == expect);
        // with weakly decreasing nonzero parts no pinned swap applies
        Composition nz;
        for (int v : a)
            if (v) nz.push_back(v);
        if (std::is_sorted(nz.rbegin(), nz.rend())) {
            auto akd = atomic_kohnert_diagrams(a);
            CHECK(pkd == std::set<Diagram>(akd.begin(), akd.end()));
        }
    }
}

TEST_CASE("sorting to a partition") {
    CHECK(sort_to_partition({0, 2, 1}) == Composition{0, 1, 2});
    CHECK(sort_to_partition({0, 0}) == Composition{0, 0});
    CHECK(sort_to_partition({5, 2, 0, 5, 4, 0}) == Composition{0, 0, 2, 4, 5, 5});
}

TEST_CASE("lift of the five diagrams of KD(0,2,1)") {
    Composition alpha{0, 2, 1};
    auto tab = [](Composition shape, std::vector<std::vector<int>> rows) {
        return ReverseTableau{std::move(shape), std::move(rows)};
    };
    CHECK(lift_to_tableau(composition_diagram(alpha), alpha) ==
          tab({0, 1, 2}, {{}, {2}, {3, 2}}));
    CHECK(lift_to_tableau(diag({{1, 2}, {2, 1}, {1, 3}}), alpha) ==
          tab({0, 1, 2}, {{}, {2}, {3, 1}}));
    CHECK(lift_to_tableau(diag({{1, 1}, {2, 1}, {1, 3}}), alpha) ==
          tab({0, 1, 2}, {{}, {1}, {3, 1}}));
    CHECK(lift_to_tableau(diag({{1, 1}, {2, 1}, {1, 2}}), alpha) ==
          tab({0, 1, 2}, {{}, {1}, {2, 1}}));
    CHECK(lift_to_tableau(diag({{1, 1}, {1, 2}, {2, 2}}), alpha) ==
          tab({0, 1, 2}, {{}, {1}, {2, 2}}));
    // superstandard image of a partition diagram
    CHECK(lift_to_tableau(composition_diagram({0, 1, 2}), {0, 1, 2}) ==
          tab({0, 1, 2}, {{}, {2}, {3, 3}}));
}

TEST_CASE("lift is injective and weight preserving") {
    for (const auto& a : kt::all_compositions(3, 3)) {
        if (total(a) > 6) continue;
        auto kd = kohnert_diagrams(a);
        std::set<ReverseTableau> images;
        for (const Diagram& d : kd) {
            ReverseTableau t = lift_to_tableau(d, a);
            CHECK(is_reverse_tableau(t));
            Composition wt(a.size(), 0);
            for (const auto& row : t.rows)
                for (int e : row) wt[e - 1] += 1;
            CHECK(wt == diagram_weight(d, int(a.size())));
            images.insert(t);
        }
        CHECK(images.size() == kd.size());
    }
}
