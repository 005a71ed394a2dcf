#include "kohnert/labeling.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_set>

#include "kohnert/core.hpp"

namespace kohnert {

int Labeling::label_of(Cell c) const {
    const auto& cells = diagram.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || !(*it == c)) throw std::invalid_argument("label_of: cell not in diagram");
    return labels[std::size_t(it - cells.begin())];
}

std::optional<Cell> Labeling::cell_with_label(int col, int r) const {
    const auto& cells = diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].col == col && labels[i] == r) return cells[i];
    }
    return std::nullopt;
}

ProperLabelingResult proper_labeling(const Diagram& t, const Composition& alpha) {
    ProperLabelingResult res;
    res.labeling.diagram = t;
    res.labeling.shape = alpha;
    res.labeling.labels.assign(t.size(), 0);
    if (t.max_row() > int(alpha.size())) {
        res.failure = LabelFailure::column_mismatch;
        return res;
    }
    int maxc = t.max_col();
    for (int v : alpha) maxc = std::max(maxc, v);
    const auto& cells = t.cells();
    // previous column's assignment: label -> row
    std::map<int, int> right;
    for (int c = maxc; c >= 1; --c) {
        std::vector<int> avail;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] >= c) avail.push_back(int(i) + 1);
        }
        std::vector<std::size_t> col_cells;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].col == c) col_cells.push_back(i);
        }
        if (col_cells.size() != avail.size()) {
            res.failure = LabelFailure::column_mismatch;
            res.failed_at = {c, 0};
            return res;
        }
        // cells() is sorted by (col,row), so col_cells runs bottom to top
        std::map<int, int> current;
        std::vector<bool> used(avail.size(), false);
        for (std::size_t idx : col_cells) {
            int row = cells[idx].row;
            bool assigned = false;
            for (std::size_t j = 0; j < avail.size(); ++j) {
                if (used[j]) continue;
                int lab = avail[j];
                auto it = right.find(lab);
                if (it != right.end() && it->second > row) continue;  // must be weakly lower
                used[j] = true;
                res.labeling.labels[idx] = lab;
                current[lab] = row;
                assigned = true;
                break;
            }
            if (!assigned) {
                res.failure = LabelFailure::no_label;
                res.failed_at = cells[idx];
                return res;
            }
        }
        right = std::move(current);
    }
    return res;
}

namespace {

// label -> row occupied in each column; empty optional when absent
int row_of_label(const Labeling& l, int col, int r) {
    auto c = l.cell_with_label(col, r);
    return c ? c->row : 0;
}

}  // namespace

bool is_strict(const Labeling& l) {
    int maxc = 0;
    for (int p : l.shape) maxc = std::max(maxc, p);
    if (l.diagram.max_col() > maxc) return false;
    for (int c = 1; c <= maxc; ++c) {
        std::vector<int> want;
        for (std::size_t i = 0; i < l.shape.size(); ++i) {
            if (l.shape[i] >= c) want.push_back(int(i) + 1);
        }
        std::vector<int> have;
        const auto& cells = l.diagram.cells();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].col == c) have.push_back(l.labels[i]);
        }
        std::sort(have.begin(), have.end());
        if (have != want) return false;
    }
    return true;
}

bool is_flagged(const Labeling& l) {
    const auto& cells = l.diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (l.labels[i] < cells[i].row) return false;
    }
    return true;
}

bool is_descending(const Labeling& l) {
    for (std::size_t i = 0; i < l.shape.size(); ++i) {
        int r = int(i) + 1;
        int prev = 0;
        for (int c = 1; c <= l.shape[i]; ++c) {
            int row = row_of_label(l, c, r);
            if (row == 0) return false;
            if (c > 1 && row > prev) return false;
            prev = row;
        }
    }
    return true;
}

bool is_semi_proper(const Labeling& l) {
    return is_strict(l) && is_flagged(l) && is_descending(l);
}

bool is_pinned(const Labeling& l) {
    const auto& cells = l.diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].col == 1 && l.labels[i] != cells[i].row) return false;
    }
    return true;
}

bool is_proper_minimal(const Labeling& l) {
    // if r < s share a column with r above s, an r must sit in the next
    // column strictly above that s
    const auto& cells = l.diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[i].col != cells[j].col) continue;
            int r = l.labels[i], s = l.labels[j];
            if (r < s && cells[i].row > cells[j].row) {
                int row = row_of_label(l, cells[i].col + 1, r);
                if (row == 0 || row <= cells[j].row) return false;
            }
        }
    }
    return true;
}

Labeling atomic_labeling(const Diagram& d) {
    Labeling l;
    l.diagram = d;
    l.labels.assign(d.size(), 0);
    l.shape.assign(std::max(d.max_row(), 1), 0);
    if (d.empty()) return l;
    for (const Thread& t : thread_decomposition(d)) {
        if (t.terminal_row == 0) throw std::invalid_argument("atomic labeling of a non-rectified diagram");
        if (t.terminal_row > int(l.shape.size())) l.shape.resize(t.terminal_row, 0);
        l.shape[t.terminal_row - 1] = int(t.cells.size());
        const auto& cells = d.cells();
        for (const Cell& c : t.cells) {
            auto it = std::lower_bound(cells.begin(), cells.end(), c);
            l.labels[std::size_t(it - cells.begin())] = t.terminal_row;
        }
    }
    return l;
}

bool touches(const Labeling& l, int r, int s, int c) {
    if (r >= s) throw std::invalid_argument("touches: need r < s");
    int row_r = row_of_label(l, c, r);
    int row_s = row_of_label(l, c + 1, s);
    return row_r != 0 && row_s != 0 && row_s <= row_r;
}

bool crosses(const Labeling& l, int r, int s, int c) {
    if (!touches(l, r, s, c)) return false;
    int row_s = row_of_label(l, c + 1, s);
    int row_r = row_of_label(l, c + 1, r);
    return row_r != 0 && row_r > row_s;
}

bool abuts(const Labeling& l, int r, int s, int c) {
    return touches(l, r, s, c) && !crosses(l, r, s, c);
}

bool position_abuts(const Labeling& l, Cell x, int r) {
    if (x.col < 2) return false;
    if (l.diagram.contains(x)) throw std::invalid_argument("position_abuts: x must be vacant");
    int c = x.col - 1;
    int row_left = row_of_label(l, c, r);
    if (row_left == 0 || row_left < x.row) return false;
    if (r <= int(l.shape.size()) && l.shape[r - 1] == c) return true;
    int row_here = row_of_label(l, x.col, r);
    return row_here != 0 && row_here < x.row;
}

Labeling exchange_labeling(const Labeling& l, int r, int s, int c) {
    if (!abuts(l, r, s, c)) throw std::invalid_argument("exchange_labeling: s does not abut r at column c");
    int shape_r = l.shape[r - 1];
    int shape_s = l.shape[s - 1];
    int d = 0;
    for (int cc = c + 1; cc <= shape_s; ++cc) {
        if (touches(l, r, s, cc)) {
            d = cc;
            break;
        }
    }
    bool retouch = d != 0;
    if (!retouch) d = shape_s;
    Labeling out = l;
    const auto& cells = out.diagram.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].col < c + 1 || cells[i].col > d) continue;
        if (out.labels[i] == r)
            out.labels[i] = s;
        else if (out.labels[i] == s)
            out.labels[i] = r;
    }
    if (!retouch && shape_r < shape_s) {
        std::swap(out.shape[r - 1], out.shape[s - 1]);
    }
    return out;
}

std::vector<std::array<int, 3>> legal_exchanges(const Labeling& l) {
    std::vector<std::array<int, 3>> out;
    int n = int(l.shape.size());
    for (int r = 1; r <= n; ++r) {
        if (l.shape[r - 1] == 0) continue;
        for (int s = r + 1; s <= n; ++s) {
            if (l.shape[s - 1] == 0) continue;
            int maxc = std::min(l.shape[r - 1], l.shape[s - 1] - 1);
            for (int c = 1; c <= maxc; ++c) {
                if (abuts(l, r, s, c)) out.push_back({r, s, c});
            }
        }
    }
    return out;
}

std::vector<Labeling> semi_proper_closure(const Diagram& t, const Composition& alpha) {
    auto res = proper_labeling(t, alpha);
    if (!res.ok() || !is_flagged(res.labeling))
        throw std::invalid_argument("semi_proper_closure: diagram not in KD(alpha)");
    if (!is_pinned(res.labeling))
        throw std::invalid_argument("semi_proper_closure: proper labeling not pinned");
    std::unordered_set<Labeling, LabelingHash> seen{res.labeling};
    std::deque<Labeling> queue{res.labeling};
    while (!queue.empty()) {
        Labeling l = std::move(queue.front());
        queue.pop_front();
        for (const auto& [r, s, c] : legal_exchanges(l)) {
            Labeling next = exchange_labeling(l, r, s, c);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Labeling> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool kd_membership(const Diagram& t, const Composition& alpha) {
    if (total(alpha) != int(t.size())) return false;
    auto res = proper_labeling(t, alpha);
    return res.ok() && is_flagged(res.labeling);
}

}  // namespace kohnert
