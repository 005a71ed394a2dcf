#pragma once

#include <optional>
#include <vector>

#include "kohnert/labeling.hpp"
#include "kohnert/types.hpp"

namespace kohnert {

// One step of a rectification: the cell enters at position, either landing
// there, bumping the cell below it in its column, or passing left within
// its row.
struct RectStep {
    enum class Kind { pass, bump, land };
    Kind kind = Kind::land;
    Cell position{0, 0};
    std::optional<Cell> bumped;  // cell removed on a bump
    std::optional<int> label;    // witnessing label for bump/land
};

struct RectTrace {
    std::vector<RectStep> steps;
    Cell landing{0, 0};
    int landing_column = 0;
};

struct RectResult {
    Diagram diagram;
    RectTrace trace;
};

struct InsertResult {
    Diagram diagram;
    RectTrace trace;
    Composition alpha_used;
};

struct KChainStep {
    int added_column = 0;
    int extended_row = 0;
    Composition before;
    Composition after;

    friend auto operator<=>(const KChainStep&, const KChainStep&) = default;
};

struct IteratedInsertResult {
    Diagram diagram;
    std::vector<KChainStep> chain;
    std::vector<Composition> alpha_chain;  // maximal labels after each step
    std::vector<RectTrace> traces;
};

// The unique maximal alpha with theta(t) below alpha in the pinned order and
// alpha below beta in the left-swap order. Aborts if the maximum is not
// unique, which would contradict the uni-triangularity argument.
Composition maximal_rectified_label(const Diagram& t, const Composition& beta);

// Rectification of t labeled by alpha with the vacant position x restricted
// by k. Requires t in PKD(alpha), x vacant, row(x) <= k.
RectResult restricted_rectify(const Diagram& t, const Composition& alpha, Cell x, int k);

// Insertion of row r restricted by k into t labeled by beta: rectify from
// position (max(beta)+1, r) using the maximal rectified label.
InsertResult insert_row(const Diagram& t, const Composition& beta, int k, int r);

// Inverse of insert_row: recover (t, r) from u = insert_row(t, beta, k, r).
// Throws std::invalid_argument when u is not in the image.
struct ExciseResult {
    Diagram diagram;
    int row = 0;
};
ExciseResult excise(const Diagram& u, const Composition& beta, int k);

// k-addable positions and k-addition of the paper's growth order.
std::vector<Cell> k_addable_positions(const Composition& beta, int k);
Composition k_addition(const Composition& beta, Cell pos, int k);

// One-step covers of the growth order, realized by k-additions.
std::vector<std::pair<Composition, KChainStep>> k_chain_covers(const Composition& beta, int k);
// Covers read literally off the swap-chain definition; kept for comparison,
// not used operationally (see tests for where the two formulations differ).
std::vector<Composition> k_chain_covers_by_swaps(const Composition& beta, int k);
// beta grows to gamma by some sequence of k-additions.
bool k_chain_leq(const Composition& beta, const Composition& gamma, int k);

// Iterated insertion with rectified-label bookkeeping: after each landing,
// the label grows by the k-addition in the landing column with the minimal
// extended row consistent with the thread weight.
IteratedInsertResult iterated_insert(const Diagram& t, const Composition& beta, int k,
                                     const std::vector<int>& rows);

}  // namespace kohnert
