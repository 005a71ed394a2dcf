#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kohnert/types.hpp"

namespace kohnert {

// Labeling of a diagram. labels runs parallel to diagram.cells(); shape is
// stored explicitly (exchange labelings mutate it in a controlled way) and
// recomputing it from the entries is a validation path only.
struct Labeling {
    Diagram diagram;
    std::vector<int> labels;
    Composition shape;

    int label_of(Cell c) const;
    // cell carrying label r in column col, if any
    std::optional<Cell> cell_with_label(int col, int r) const;

    friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

struct LabelingHash {
    std::size_t operator()(const Labeling& l) const {
        std::size_t h = DiagramHash{}(l.diagram);
        for (int v : l.labels) h = (h ^ std::size_t(v)) * 1099511628211ull;
        for (int v : l.shape) h = (h ^ std::size_t(v + 7)) * 1099511628211ull;
        return h;
    }
};

enum class LabelFailure { none, column_mismatch, no_label };

// Result of the greedy proper-labeling construction. ok() means the
// construction completed; flaggedness is a separate check (the two together
// decide KD membership).
struct ProperLabelingResult {
    Labeling labeling;
    LabelFailure failure = LabelFailure::none;
    Cell failed_at{0, 0};  // cell (or column marker) where labeling got stuck

    bool ok() const { return failure == LabelFailure::none; }
};

// Columns right to left; within a column bottom to top, choosing the
// smallest unused label i with alpha_i >= c whose occurrence in column c+1,
// if any, is weakly lower.
ProperLabelingResult proper_labeling(const Diagram& t, const Composition& alpha);

bool is_strict(const Labeling& l);      // column c holds exactly {r : shape_r >= c}
bool is_flagged(const Labeling& l);     // every entry >= its row
bool is_descending(const Labeling& l);  // equal labels weakly descend left to right
bool is_semi_proper(const Labeling& l); // strict && flagged && descending
bool is_pinned(const Labeling& l);      // column-1 entries equal their rows
bool is_proper_minimal(const Labeling& l);  // minimality condition of proper labelings

// Thread labeling: each cell of a thread gets the thread's terminal row.
Labeling atomic_labeling(const Diagram& d);

// s touches r at column c: an s in column c+1 lies weakly below the r in
// column c. s crosses r when additionally an r sits above that s in column
// c+1; otherwise s abuts r. Requires r < s and both labels present per shape.
bool touches(const Labeling& l, int r, int s, int c);
bool crosses(const Labeling& l, int r, int s, int c);
bool abuts(const Labeling& l, int r, int s, int c);

// Vacant-position abutment used by insertion: x (not in the diagram, in
// column c+1) abuts r when the r in column c lies weakly above x and either
// shape_r == c or the r in column c+1 lies strictly below x.
bool position_abuts(const Labeling& l, Cell x, int r);

// Exchange labeling L^c_{r,s}: swap labels r and s in columns c+1..d, where
// d is the first column right of c where s touches r, else shape_s.
// Precondition: s abuts r at column c.
Labeling exchange_labeling(const Labeling& l, int r, int s, int c);

// All (r, s, c) with s abuts r at column c.
std::vector<std::array<int, 3>> legal_exchanges(const Labeling& l);

// BFS closure of the proper labeling of t under exchange labelings. By the
// exchange theorem this is exactly the set of semi-proper pinned labelings
// of t with shape below alpha in the pinned order.
// Precondition: t in PKD(alpha).
std::vector<Labeling> semi_proper_closure(const Diagram& t, const Composition& alpha);

// t in KD(alpha) iff the proper labeling is well-defined and flagged.
bool kd_membership(const Diagram& t, const Composition& alpha);

}  // namespace kohnert
