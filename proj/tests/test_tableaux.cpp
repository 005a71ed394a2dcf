#include "doctest.h"

#include <algorithm>
#include <set>

#include "kohnert/core.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/tableaux.hpp"
#include "test_helpers.hpp"

using namespace kohnert;
using kt::diag;

namespace {

ReverseTableau tab(Composition shape, std::vector<std::vector<int>> rows) {
    return ReverseTableau{std::move(shape), std::move(rows)};
}

Composition tableau_weight(const ReverseTableau& t, int m) {
    Composition w(m, 0);
    for (const auto& row : t.rows)
        for (int e : row) w[e - 1] += 1;
    return w;
}

// partitions with at most m parts and at most n cells, as weakly
// increasing length-m compositions
std::vector<Composition> small_partitions(int m, int n) {
    std::vector<Composition> out;
    for (const Composition& a : kt::all_compositions(m, n)) {
        if (total(a) <= n && is_partition(a)) out.push_back(a);
    }
    return out;
}

}  // namespace

TEST_CASE("reverse tableaux of a small shape") {
    // the five lifted diagrams of KD(0,2,1) sit inside the eight tableaux of
    // the full set (the lift is injective, not surjective, off partitions)
    auto all = generate_ssrt({0, 1, 2});
    CHECK(all.size() == 8);
    std::set<ReverseTableau> got(all.begin(), all.end());
    CHECK(got.count(tab({0, 1, 2}, {{}, {2}, {3, 2}})));
    CHECK(got.count(tab({0, 1, 2}, {{}, {2}, {3, 1}})));
    CHECK(got.count(tab({0, 1, 2}, {{}, {1}, {3, 1}})));
    CHECK(got.count(tab({0, 1, 2}, {{}, {1}, {2, 1}})));
    CHECK(got.count(tab({0, 1, 2}, {{}, {1}, {2, 2}})));
    CHECK(generate_ssrt({0, 0, 0}).size() == 1);
    CHECK_THROWS(generate_ssrt({2, 1}));
}

TEST_CASE("tableau counts match the character specialization") {
    // |SSRT(lambda)| equals the number of Kohnert diagrams of the partition
    for (const Composition& l : small_partitions(3, 6)) {
        CHECK(generate_ssrt(l).size() == kohnert_diagrams(l).size());
    }
}

TEST_CASE("rsk insertion bumps down the rows") {
    // lifting of the big example, then inserting 5
    ReverseTableau p = tab({0, 0, 2, 4, 5, 5},
                           {{}, {}, {2, 1}, {3, 2, 2, 1}, {5, 5, 3, 2, 1}, {6, 6, 4, 3, 3}});
    REQUIRE(is_reverse_tableau(p));
    auto [q, cell] = rsk_insert(p, 5);
    CHECK(q == tab({0, 1, 2, 4, 5, 5},
                   {{}, {1}, {2, 2}, {3, 3, 2, 1}, {5, 5, 4, 2, 1}, {6, 6, 5, 3, 3}}));
    CHECK(cell == Cell{1, 2});
    auto [back, val] = rsk_reverse(q, cell);
    CHECK(back == p);
    CHECK(val == 5);
}

TEST_CASE("inserting the maximum appends to the first row") {
    ReverseTableau p = tab({0, 1, 2}, {{}, {2}, {3, 3}});
    auto [q, cell] = rsk_insert(p, 3);
    CHECK(cell == Cell{3, 3});
    CHECK(q.rows[2] == std::vector<int>{3, 3, 3});
}

TEST_CASE("rsk round trip over small shapes") {
    for (const Composition& l : small_partitions(3, 5)) {
        for (const ReverseTableau& p : generate_ssrt(l)) {
            for (int r = 1; r <= int(l.size()); ++r) {
                auto [q, cell] = rsk_insert(p, r);
                CHECK(is_reverse_tableau(q));
                auto [back, val] = rsk_reverse(q, cell);
                CHECK(back == p);
                CHECK(val == r);
            }
        }
    }
}

TEST_CASE("the worked biword") {
    ReverseTableau r = tab({0, 0, 2, 3}, {{}, {}, {3, 1}, {4, 3, 2}});
    REQUIRE(is_reverse_tableau(r));
    TwoLineArray biword = tableau_to_biword(r);
    TwoLineArray want;
    want.pairs = {{4, 3}, {4, 3}, {4, 1}, {3, 4}, {3, 2}};
    CHECK(biword == want);
}

TEST_CASE("biword of a superstandard tableau") {
    // the bottom letters of each phase fill the next row up: phase-3 letters
    // are 2's that the later 3's bump into row 2
    ReverseTableau r = tab({0, 2, 2}, {{}, {2, 2}, {3, 3}});
    TwoLineArray biword = tableau_to_biword(r);
    TwoLineArray want;
    want.pairs = {{3, 2}, {3, 2}, {2, 3}, {2, 3}};
    CHECK(biword == want);
}

TEST_CASE("biwords reinsert to the original tableau") {
    for (const Composition& l : small_partitions(3, 5)) {
        for (const ReverseTableau& r : generate_ssrt(l)) {
            TwoLineArray biword = tableau_to_biword(r);
            // top row is (k^{lambda_k}, ..., 1^{lambda_1})
            std::vector<int> top_want;
            for (int q = int(l.size()); q >= 1; --q) {
                for (int j = 0; j < l[q - 1]; ++j) top_want.push_back(q);
            }
            std::vector<int> top;
            for (const auto& [q, rr] : biword.pairs) top.push_back(q);
            CHECK(top == top_want);
            ReverseTableau p = tab(Composition(l.size(), 0),
                                   std::vector<std::vector<int>>(l.size()));
            std::vector<Cell> cells;
            for (const auto& [q, rr] : biword.pairs) {
                auto [next, cell] = rsk_insert(p, rr);
                p = std::move(next);
                cells.push_back(cell);
            }
            CHECK(p == r);
            // recording entries land exactly in their biword rows
            for (std::size_t i = 0; i < cells.size(); ++i) {
                CHECK(cells[i].row == biword.pairs[i].first);
            }
        }
    }
}

TEST_CASE("skew cells of the recording figure") {
    // chain from (1,0,3,1,0,4) with columns 2,3,5,2,4 and rows 4,4,4,1,3
    Diagram t0 = kt::iterated_figure_diagram();
    Composition beta{1, 0, 3, 1, 0, 4};
    IteratedInsertResult run = iterated_insert(t0, beta, 4, {3, 3, 1, 4, 2});
    // alpha = gamma: the skew cells are the added cells themselves
    CHECK(skew_cells({2, 0, 4, 5, 0, 3}, run.chain) ==
          std::vector<Cell>{{2, 4}, {3, 4}, {5, 4}, {2, 1}, {4, 3}});
    // alpha = (4,0,5,3,0,2): the drawn skew diagram
    CHECK(skew_cells({4, 0, 5, 3, 0, 2}, run.chain) ==
          std::vector<Cell>{{2, 4}, {3, 3}, {5, 3}, {2, 1}, {4, 1}});
    CHECK(skew_cells({2, 0, 4, 5, 0, 3}, {}).empty());
}

TEST_CASE("recording tableau of the iterated-insertion figure") {
    Diagram t0 = kt::iterated_figure_diagram();
    Composition beta{1, 0, 3, 1, 0, 4};
    IteratedInsertResult run = iterated_insert(t0, beta, 4, {3, 3, 1, 4, 2});
    TwoLineArray biword;
    biword.pairs = {{4, 3}, {4, 3}, {4, 1}, {3, 4}, {3, 2}};
    SkewTableau q = record(run, beta, 4, biword);
    CHECK(q.ambient == Composition{4, 0, 5, 3, 0, 2});
    std::map<Cell, int> want = {{{2, 4}, 4}, {{3, 3}, 4}, {{5, 3}, 4}, {{2, 1}, 3}, {{4, 1}, 3}};
    CHECK(q.entries == want);
    CHECK(is_atomic(q));
    CHECK(is_lattice(q));
    CHECK(q.weight(4) == Composition{0, 0, 2, 3});

    SkewTableau key = atomic_to_key(q);
    CHECK(key.ambient == Composition{2, 0, 4, 5, 0, 3});
    std::map<Cell, int> want_key = {{{2, 4}, 4}, {{3, 4}, 4}, {{5, 4}, 4}, {{2, 1}, 3}, {{4, 3}, 3}};
    CHECK(key.entries == want_key);
    CHECK(is_key(key));
    CHECK(is_lattice(key));
    CHECK(key_to_atomic(key, q.ambient) == q);
}

TEST_CASE("recording tableau of the worked appendix run") {
    Diagram t0 = kt::appendix_start_diagram();
    Composition beta{1, 0, 3, 1, 0, 4};
    IteratedInsertResult run = iterated_insert(t0, beta, 4, {3, 3, 1, 4, 2});
    TwoLineArray biword;
    biword.pairs = {{4, 3}, {4, 3}, {4, 1}, {3, 4}, {3, 2}};
    SkewTableau q = record(run, beta, 4, biword);
    CHECK(q.ambient == Composition{2, 0, 5, 5, 0, 2});
    // final key recording tableau of the appendix
    SkewTableau key = atomic_to_key(q);
    CHECK(key.ambient == Composition{2, 0, 5, 5, 0, 2});
    std::map<Cell, int> want_key = {{{2, 4}, 4}, {{4, 3}, 4}, {{5, 3}, 4}, {{2, 1}, 3}, {{5, 4}, 3}};
    CHECK(key.entries == want_key);
    CHECK(is_key(key));
    CHECK(is_lattice(key));
    CHECK(is_atomic(q));
    CHECK(is_lattice(q));
}

TEST_CASE("lattice readings agree") {
    Diagram t0 = kt::iterated_figure_diagram();
    Composition beta{1, 0, 3, 1, 0, 4};
    for (const ChainData& c : k_addition_chains(beta, 4, 2)) {
        for (const SkewTableau& t : enumerate_lat(c.gamma, beta, c.steps, {0, 0, 0, 2}, 4)) {
            CHECK(is_lattice(t) == is_lattice_partition_reading(t));
        }
    }
    // and on arbitrary fillings of a small skew shape
    for (const ChainData& c : k_addition_chains({0, 1, 2}, 2, 2)) {
        SkewTableau proto;
        proto.chain = c.steps;
        proto.base = Composition{0, 1, 2};
        proto.ambient = c.gamma;
        proto.k = 2;
        auto cells = skew_cells(c.gamma, c.steps);
        for (int e1 = 1; e1 <= 2; ++e1) {
            for (int e2 = 1; e2 <= 2; ++e2) {
                SkewTableau t = proto;
                t.entries[cells[0]] = e1;
                t.entries[cells[1]] = e2;
                CHECK(is_lattice(t) == is_lattice_partition_reading(t));
            }
        }
    }
}

TEST_CASE("empty skew tableau is atomic, key, and lattice") {
    SkewTableau t;
    t.base = Composition{0, 1};
    t.ambient = Composition{0, 1};
    t.k = 2;
    CHECK(is_atomic(t));
    t.key_variant = true;
    CHECK(is_key(t));
    CHECK(is_lattice(t));
    CHECK(is_lattice_partition_reading(t));
}

TEST_CASE("recording tableaux from all runs validate") {
    Composition beta{0, 1, 2};
    int k = 2;
    Composition lambda{0, 2};  // two cells, two rows
    auto tableaux = generate_ssrt(lambda);
    for (const Diagram& t : kohnert_diagrams(beta)) {
        for (const ReverseTableau& r : tableaux) {
            TwoLineArray biword = tableau_to_biword(r);
            std::vector<int> word;
            for (const auto& [q, rr] : biword.pairs) word.push_back(rr);
            IteratedInsertResult run = iterated_insert(t, beta, k, word);
            SkewTableau rec = record(run, beta, k, biword);
            CHECK(is_atomic(rec));
            CHECK(is_lattice(rec));
            CHECK(rec.weight(int(lambda.size())) == lambda);
            SkewTableau key = atomic_to_key(rec);
            CHECK(is_key(key));
            CHECK(is_lattice(key));
            CHECK(key_to_atomic(key, rec.ambient) == rec);
        }
    }
}

TEST_CASE("atomic and key enumerations are in bijection") {
    for (const Composition& beta : kt::all_compositions(3, 2)) {
        if (total(beta) > 4) continue;
        for (int k = 1; k <= 2; ++k) {
            for (const ChainData& chain : k_addition_chains(beta, k, 2)) {
                for (const Composition& lambda : small_partitions(k, 2)) {
                    if (total(lambda) != 2) continue;
                    auto lkt = enumerate_lkt(beta, chain.steps, lambda, k);
                    for (const Composition& alpha : left_swap_down_set(chain.gamma)) {
                        auto lat = enumerate_lat(alpha, beta, chain.steps, lambda, k);
                        CHECK(lat.size() == lkt.size());
                        std::set<SkewTableau> image;
                        for (const SkewTableau& t : lat) {
                            SkewTableau u = atomic_to_key(t);
                            CHECK(is_key(u));
                            CHECK(is_lattice(u));
                            CHECK(key_to_atomic(u, alpha) == t);
                            image.insert(u);
                        }
                        CHECK(image == std::set<SkewTableau>(lkt.begin(), lkt.end()));
                    }
                }
            }
        }
    }
}

TEST_CASE("oversized weight enumerates to nothing") {
    Composition beta{0, 1};
    auto chains = k_addition_chains(beta, 2, 1);
    REQUIRE(!chains.empty());
    CHECK(enumerate_lat(chains[0].gamma, beta, chains[0].steps, {0, 2}, 2).empty());
}

TEST_CASE("insertion agrees with rsk through the lift") {
    for (const auto& a : kt::all_compositions(3, 3)) {
        int n = total(a);
        if (n < 1 || n > 5) continue;
        int k = int(a.size());
        for (const Diagram& t : kohnert_diagrams(a)) {
            ReverseTableau p = lift_to_tableau(t, a);
            for (int r = 1; r <= k; ++r) {
                InsertResult res = insert_row(t, a, k, r);
                auto [q, cell] = rsk_insert(p, r);
                CHECK(lift_columns(res.diagram, k) == q);
            }
        }
    }
}
