#pragma once

#include <optional>
#include <vector>

#include "kohnert/types.hpp"

namespace kohnert {

// One thread of the thread decomposition: cells in threading order
// (rightmost column first, consecutive columns adjacent). terminal_row is
// the row of the column-1 cell, or 0 if the thread stops short of column 1.
struct Thread {
    std::vector<Cell> cells;
    int terminal_row = 0;
};

// Default cap on |alpha| for closure generation; override per call or with
// the KOHNERT_BUDGET environment variable.
int default_cell_budget();

// D(alpha): alpha[r-1] cells left-justified in row r.
Diagram composition_diagram(const Composition& alpha);

// Kohnert move on row r: drop the rightmost cell of the row to the highest
// vacant position below it in its column. No move when the row is empty or
// the cell is blocked to the floor.
std::optional<Diagram> kohnert_move(const Diagram& d, int row);

// KD(alpha): closure of {D(alpha)} under Kohnert moves, sorted canonically.
std::vector<Diagram> kohnert_diagrams(const Composition& alpha, int budget = -1);

// Row weight; length must cover the highest occupied row.
Composition diagram_weight(const Diagram& d, int length);

std::vector<Thread> thread_decomposition(const Diagram& d);
bool is_rectified(const Diagram& d);

// theta(d); requires is_rectified(d). Entry r = size of the thread whose
// column-1 cell sits in row r.
Composition thread_weight(const Diagram& d, int length);

// alpha <= beta in the left-swap order: alpha reachable from beta by swaps
// moving a larger part to a smaller index. The pinned variant additionally
// requires both swapped parts nonzero.
bool left_swap_leq(const Composition& alpha, const Composition& beta);
bool pinned_swap_leq(const Composition& alpha, const Composition& beta);

// Downward closure of beta under (pinned) left swaps; sorted.
std::vector<Composition> left_swap_down_set(const Composition& beta);
std::vector<Composition> pinned_swap_down_set(const Composition& beta);
// All alpha with beta reachable from alpha by pinned swaps (upward set).
std::vector<Composition> pinned_swap_up_set(const Composition& beta);

// AKD(alpha) = {T in KD(alpha) : theta(T) = alpha}.
std::vector<Diagram> atomic_kohnert_diagrams(const Composition& alpha, int budget = -1);
// PKD(alpha) = {T in KD(alpha) : proper labeling of shape alpha is pinned}.
std::vector<Diagram> pinned_kohnert_diagrams(const Composition& alpha, int budget = -1);

// lambda(alpha): the weakly increasing rearrangement.
Composition sort_to_partition(const Composition& alpha);
bool is_partition(const Composition& alpha);

// Reverse tableau stored per row: entries[r-1] lists row r left to right.
// Rows weakly decrease; columns strictly decrease top to bottom.
struct ReverseTableau {
    Composition shape;                   // weakly increasing
    std::vector<std::vector<int>> rows;  // rows[i] has shape[i] entries

    friend auto operator<=>(const ReverseTableau&, const ReverseTableau&) = default;
};

bool is_reverse_tableau(const ReverseTableau& t);

// The lifting map: assign entry i to each cell in row i, then raise cells to
// the top of their columns. Requires d in KD(alpha).
ReverseTableau lift_to_tableau(const Diagram& d, const Composition& alpha);
// Same lift without the membership check (shape inferred from columns).
ReverseTableau lift_columns(const Diagram& d, int length);

}  // namespace kohnert
