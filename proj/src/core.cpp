#include "kohnert/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "kohnert/labeling.hpp"

namespace kohnert {

int default_cell_budget() {
    if (const char* env = std::getenv("KOHNERT_BUDGET")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

Diagram composition_diagram(const Composition& alpha) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("negative part in composition");
        for (int c = 1; c <= alpha[i]; ++c) cells.push_back({c, int(i) + 1});
    }
    return Diagram(std::move(cells));
}

std::optional<Diagram> kohnert_move(const Diagram& d, int row) {
    int col = d.rightmost_in_row(row);
    if (col == 0) return std::nullopt;
    int target = 0;
    for (int r = row - 1; r >= 1; --r) {
        if (!d.contains({col, r})) {
            target = r;
            break;
        }
    }
    if (target == 0) return std::nullopt;
    return d.without_cell({col, row}).with_cell({col, target});
}

std::vector<Diagram> kohnert_diagrams(const Composition& alpha, int budget) {
    if (budget < 0) budget = default_cell_budget();
    if (total(alpha) > budget) {
        throw budget_error("closure refused: |alpha| = " + std::to_string(total(alpha)) +
                           " exceeds budget " + std::to_string(budget) +
                           " (raise with KOHNERT_BUDGET)");
    }
    Diagram start = composition_diagram(alpha);
    int nrows = int(alpha.size());
    std::unordered_set<Diagram, DiagramHash> seen{start};
    std::deque<Diagram> queue{start};
    while (!queue.empty()) {
        Diagram d = std::move(queue.front());
        queue.pop_front();
        for (int r = 2; r <= nrows; ++r) {
            if (auto next = kohnert_move(d, r)) {
                if (seen.insert(*next).second) queue.push_back(*next);
            }
        }
    }
    std::vector<Diagram> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Composition diagram_weight(const Diagram& d, int length) {
    if (length < d.max_row()) throw std::invalid_argument("weight length below max occupied row");
    Composition w(length, 0);
    for (const Cell& c : d.cells()) w[c.row - 1] += 1;
    return w;
}

std::vector<Thread> thread_decomposition(const Diagram& d) {
    std::vector<Cell> cells = d.cells();
    std::vector<bool> threaded(cells.size(), false);
    // cells sorted by (col,row); pick rightmost then lowest unthreaded seed
    auto find_seed = [&]() -> int {
        int best = -1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (threaded[i]) continue;
            if (best < 0 || cells[i].col > cells[best].col ||
                (cells[i].col == cells[best].col && cells[i].row < cells[best].row))
                best = int(i);
        }
        return best;
    };
    // lowest unthreaded cell in column col weakly above row
    auto find_next = [&](int col, int row) -> int {
        int best = -1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (threaded[i] || cells[i].col != col || cells[i].row < row) continue;
            if (best < 0 || cells[i].row < cells[best].row) best = int(i);
        }
        return best;
    };
    std::vector<Thread> threads;
    for (int seed = find_seed(); seed >= 0; seed = find_seed()) {
        Thread t;
        int cur = seed;
        while (cur >= 0) {
            threaded[cur] = true;
            t.cells.push_back(cells[cur]);
            if (cells[cur].col == 1) break;
            cur = find_next(cells[cur].col - 1, cells[cur].row);
        }
        if (t.cells.back().col == 1) t.terminal_row = t.cells.back().row;
        threads.push_back(std::move(t));
    }
    return threads;
}

bool is_rectified(const Diagram& d) {
    for (const Thread& t : thread_decomposition(d)) {
        if (t.terminal_row == 0) return false;
    }
    return true;
}

Composition thread_weight(const Diagram& d, int length) {
    if (length < d.max_row()) throw std::invalid_argument("thread weight length below max occupied row");
    Composition theta(length, 0);
    for (const Thread& t : thread_decomposition(d)) {
        if (t.terminal_row == 0) throw std::invalid_argument("thread weight of a non-rectified diagram");
        theta[t.terminal_row - 1] = int(t.cells.size());
    }
    return theta;
}

namespace {

// Downward closure under left swaps (optionally pinned). A left swap takes
// parts a[r] < a[s], r < s, and exchanges them.
std::vector<Composition> swap_down_set(const Composition& beta, bool pinned) {
    std::unordered_set<Composition, CompositionHash> seen{beta};
    std::deque<Composition> queue{beta};
    int n = int(beta.size());
    while (!queue.empty()) {
        Composition a = std::move(queue.front());
        queue.pop_front();
        for (int r = 0; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) {
                if (a[r] >= a[s]) continue;
                if (pinned && a[r] == 0) continue;
                Composition b = a;
                std::swap(b[r], b[s]);
                if (seen.insert(b).second) queue.push_back(b);
            }
        }
    }
    std::vector<Composition> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

using DownSetCache = std::unordered_map<Composition, std::unordered_set<Composition, CompositionHash>, CompositionHash>;

std::mutex g_order_mutex;
DownSetCache g_left_cache;
DownSetCache g_pinned_cache;

const std::unordered_set<Composition, CompositionHash>& cached_down_set(const Composition& beta, bool pinned) {
    DownSetCache& cache = pinned ? g_pinned_cache : g_left_cache;
    auto it = cache.find(beta);
    if (it == cache.end()) {
        auto v = swap_down_set(beta, pinned);
        it = cache.emplace(beta, std::unordered_set<Composition, CompositionHash>(v.begin(), v.end())).first;
    }
    return it->second;
}

}  // namespace

bool left_swap_leq(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("left_swap_leq: length mismatch");
    std::lock_guard<std::mutex> lock(g_order_mutex);
    return cached_down_set(beta, false).count(alpha) > 0;
}

bool pinned_swap_leq(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("pinned_swap_leq: length mismatch");
    std::lock_guard<std::mutex> lock(g_order_mutex);
    return cached_down_set(beta, true).count(alpha) > 0;
}

std::vector<Composition> left_swap_down_set(const Composition& beta) {
    return swap_down_set(beta, false);
}

std::vector<Composition> pinned_swap_down_set(const Composition& beta) {
    return swap_down_set(beta, true);
}

std::vector<Composition> pinned_swap_up_set(const Composition& beta) {
    // reverse pinned swaps: move a smaller nonzero part left
    std::unordered_set<Composition, CompositionHash> seen{beta};
    std::deque<Composition> queue{beta};
    int n = int(beta.size());
    while (!queue.empty()) {
        Composition a = std::move(queue.front());
        queue.pop_front();
        for (int r = 0; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) {
                if (a[s] >= a[r] || a[s] == 0) continue;
                Composition b = a;
                std::swap(b[r], b[s]);
                if (seen.insert(b).second) queue.push_back(b);
            }
        }
    }
    std::vector<Composition> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagram> atomic_kohnert_diagrams(const Composition& alpha, int budget) {
    std::vector<Diagram> out;
    for (const Diagram& d : kohnert_diagrams(alpha, budget)) {
        if (thread_weight(d, int(alpha.size())) == alpha) out.push_back(d);
    }
    return out;
}

std::vector<Diagram> pinned_kohnert_diagrams(const Composition& alpha, int budget) {
    std::vector<Diagram> out;
    for (const Diagram& d : kohnert_diagrams(alpha, budget)) {
        auto res = proper_labeling(d, alpha);
        if (res.ok() && is_flagged(res.labeling) && is_pinned(res.labeling)) out.push_back(d);
    }
    return out;
}

Composition sort_to_partition(const Composition& alpha) {
    Composition l = alpha;
    std::sort(l.begin(), l.end());
    return l;
}

bool is_partition(const Composition& alpha) {
    return std::is_sorted(alpha.begin(), alpha.end());
}

bool is_reverse_tableau(const ReverseTableau& t) {
    int m = int(t.shape.size());
    if (!is_partition(t.shape) || int(t.rows.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        if (int(t.rows[i].size()) != t.shape[i]) return false;
        for (int j = 0; j < t.shape[i]; ++j) {
            int e = t.rows[i][j];
            if (e < 1 || e > m) return false;
            if (j + 1 < t.shape[i] && t.rows[i][j] < t.rows[i][j + 1]) return false;  // weakly decreasing
        }
    }
    // columns strictly decrease top to bottom = strictly increase with row index
    for (int i = 0; i + 1 < m; ++i) {
        for (int j = 0; j < t.shape[i]; ++j) {
            if (t.shape[i + 1] > j && t.rows[i][j] >= t.rows[i + 1][j]) return false;
        }
    }
    return true;
}

ReverseTableau lift_columns(const Diagram& d, int length) {
    int maxc = d.max_col();
    // column c of the target shape occupies the top column_count(c) rows
    Composition shape(length, 0);
    for (int c = 1; c <= maxc; ++c) {
        int h = d.column_count(c);
        for (int r = length - h + 1; r <= length; ++r) {
            if (r < 1) throw std::invalid_argument("lift: column taller than length");
            shape[r - 1] += 1;
        }
    }
    ReverseTableau t;
    t.shape = shape;
    t.rows.assign(length, {});
    for (int i = 0; i < length; ++i) t.rows[i].assign(shape[i], 0);
    for (int c = 1; c <= maxc; ++c) {
        std::vector<int> entries;  // bottom to top = ascending rows
        for (const Cell& x : d.cells()) {
            if (x.col == c) entries.push_back(x.row);
        }
        std::sort(entries.begin(), entries.end());
        int h = int(entries.size());
        for (int j = 0; j < h; ++j) {
            int target_row = length - h + 1 + j;
            t.rows[target_row - 1][c - 1] = entries[j];
        }
    }
    return t;
}

ReverseTableau lift_to_tableau(const Diagram& d, const Composition& alpha) {
    if (!kd_membership(d, alpha)) throw std::invalid_argument("lift_to_tableau: diagram not in KD(alpha)");
    ReverseTableau t = lift_columns(d, int(alpha.size()));
    if (t.shape != sort_to_partition(alpha) || !is_reverse_tableau(t))
        throw std::logic_error("lift_to_tableau: lift produced an invalid tableau");
    return t;
}

}  // namespace kohnert
