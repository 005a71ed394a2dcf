#include "kohnert/insertion.hpp"

#include <algorithm>
#include <map>

#include "kohnert/core.hpp"

namespace kohnert {

namespace {

// Abutment witnesses for a vacant position x over all closure labelings.
// rightmost = some witness has shape_r == x.col - 1 (no r weakly right of
// x's column), which is exactly the landing condition.
struct AbutScan {
    bool any = false;
    bool rightmost = false;
    std::optional<Cell> lowest_bump;  // lowest cell of x's column labeled by a witness r
    std::optional<int> land_label;
    std::optional<int> bump_label;
};

AbutScan scan_abutments(const std::vector<Labeling>& closure, Cell x, int k) {
    AbutScan out;
    for (const Labeling& l : closure) {
        int n = int(l.shape.size());
        for (int r = 1; r <= std::min(k, n); ++r) {
            if (!position_abuts(l, x, r)) continue;
            out.any = true;
            if (l.shape[r - 1] == x.col - 1) {
                if (!out.rightmost) {
                    out.rightmost = true;
                    out.land_label = r;
                }
            } else {
                // strict labeling: the r in x's column is the bump candidate
                auto y = l.cell_with_label(x.col, r);
                if (y && (!out.lowest_bump || y->row < out.lowest_bump->row)) {
                    out.lowest_bump = *y;
                    out.bump_label = r;
                }
            }
        }
    }
    return out;
}

}  // namespace

Composition maximal_rectified_label(const Diagram& t, const Composition& beta) {
    Composition theta = t.empty() ? Composition(beta.size(), 0) : thread_weight(t, int(beta.size()));
    std::vector<Composition> candidates;
    for (const Composition& a : pinned_swap_up_set(theta)) {
        if (left_swap_leq(a, beta)) candidates.push_back(a);
    }
    if (candidates.empty())
        throw std::invalid_argument("maximal_rectified_label: diagram not in KD(beta)");
    std::vector<Composition> maximal;
    for (const Composition& a : candidates) {
        bool top = true;
        for (const Composition& b : candidates) {
            if (a != b && pinned_swap_leq(a, b)) {
                top = false;
                break;
            }
        }
        if (top) maximal.push_back(a);
    }
    if (maximal.size() != 1)
        throw std::logic_error("maximal_rectified_label: maximum not unique for " + to_string(beta));
    return maximal[0];
}

RectResult restricted_rectify(const Diagram& t, const Composition& alpha, Cell x, int k) {
    if (t.contains(x)) throw std::invalid_argument("restricted_rectify: x not vacant");
    if (x.row > k) throw std::invalid_argument("restricted_rectify: x above row k");
    {
        auto pl = proper_labeling(t, alpha);
        if (!t.empty() && (!pl.ok() || !is_flagged(pl.labeling) || !is_pinned(pl.labeling)))
            throw std::invalid_argument("restricted_rectify: diagram not in PKD(alpha)");
    }
    RectResult res;
    Diagram d = t;
    while (true) {
        if (x.col == 1) {
            // no column to the left; pinned labelings force an immediate
            // landing with label equal to the row
            res.trace.steps.push_back({RectStep::Kind::land, x, std::nullopt, x.row});
            res.trace.landing = x;
            res.trace.landing_column = x.col;
            res.diagram = d.with_cell(x);
            return res;
        }
        AbutScan scan = d.empty() ? AbutScan{} : scan_abutments(semi_proper_closure(d, alpha), x, k);
        if (scan.rightmost) {
            res.trace.steps.push_back({RectStep::Kind::land, x, std::nullopt, scan.land_label});
            res.trace.landing = x;
            res.trace.landing_column = x.col;
            res.diagram = d.with_cell(x);
            return res;
        }
        if (scan.any) {
            Cell y = *scan.lowest_bump;
            res.trace.steps.push_back({RectStep::Kind::bump, x, y, scan.bump_label});
            d = d.with_cell(x).without_cell(y);
            x = y;
            continue;
        }
        Cell y{0, 0};
        for (int c = x.col - 1; c >= 1; --c) {
            if (!d.contains({c, x.row})) {
                y = {c, x.row};
                break;
            }
        }
        if (y.col == 0) throw std::logic_error("restricted_rectify: no vacancy left of a passing cell");
        res.trace.steps.push_back({RectStep::Kind::pass, x, std::nullopt, std::nullopt});
        x = y;
    }
}

InsertResult insert_row(const Diagram& t, const Composition& beta, int k, int r) {
    if (r < 1 || r > k) throw std::invalid_argument("insert_row: need 1 <= r <= k");
    if (!t.empty() && !kd_membership(t, beta))
        throw std::invalid_argument("insert_row: diagram not in KD(beta)");
    if (t.empty() && total(beta) != 0)
        throw std::invalid_argument("insert_row: diagram not in KD(beta)");
    InsertResult out;
    out.alpha_used = maximal_rectified_label(t, beta);
    int c = *std::max_element(beta.begin(), beta.end());
    RectResult rect = restricted_rectify(t, out.alpha_used, {c + 1, r}, k);
    out.diagram = std::move(rect.diagram);
    out.trace = std::move(rect.trace);
    return out;
}

std::vector<Cell> k_addable_positions(const Composition& beta, int k) {
    std::vector<Cell> out;
    int n = int(beta.size());
    int maxc = 0;
    for (int v : beta) maxc = std::max(maxc, v);
    for (int r = 1; r <= std::min(k, n); ++r) {
        for (int c = beta[r - 1] + 1; c <= maxc + 1; ++c) {
            if (beta[r - 1] < c - 1) {
                bool found = false;
                for (int t = k + 1; t <= n; ++t) {
                    if (beta[t - 1] == c - 1) found = true;
                }
                if (!found) continue;
            }
            bool ok = true;
            for (int s = r + 1; s <= std::min(k, n); ++s) {
                if (!(beta[s - 1] < beta[r - 1] || beta[s - 1] >= c)) ok = false;
            }
            if (ok) out.push_back({c, r});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Composition k_addition(const Composition& beta, Cell pos, int k) {
    auto addable = k_addable_positions(beta, k);
    if (std::find(addable.begin(), addable.end(), pos) == addable.end())
        throw std::invalid_argument("k_addition: position " + to_string(pos) + " not addable");
    int c = pos.col, r = pos.row;
    int n = int(beta.size());
    // the unique increasing chain beta_{r_0} < ... < beta_{r_q} = c-1 with
    // the gap condition; built greedily from r upward
    std::vector<int> rows{r};
    while (beta[rows.back() - 1] != c - 1) {
        int prev = rows.back();
        int next = 0;
        for (int s = prev + 1; s <= n; ++s) {
            if (beta[s - 1] > beta[prev - 1] && beta[s - 1] <= c - 1) {
                next = s;
                break;
            }
        }
        if (next == 0) throw std::logic_error("k_addition: no chain to column " + std::to_string(c));
        rows.push_back(next);
    }
    Composition out = beta;
    // t_{r0,rq} ... t_{r0,r1} beta cyclically shifts the chain values
    for (std::size_t i = 1; i < rows.size(); ++i) std::swap(out[r - 1], out[rows[i] - 1]);
    out[r - 1] += 1;
    return out;
}

std::vector<std::pair<Composition, KChainStep>> k_chain_covers(const Composition& beta, int k) {
    std::vector<std::pair<Composition, KChainStep>> out;
    for (Cell pos : k_addable_positions(beta, k)) {
        KChainStep step;
        step.added_column = pos.col;
        step.extended_row = pos.row;
        step.before = beta;
        step.after = k_addition(beta, pos, k);
        out.push_back({step.after, step});
    }
    return out;
}

std::vector<Composition> k_chain_covers_by_swaps(const Composition& beta, int k) {
    // literal reading of the swap-chain definition:
    // gamma = t_{r,s_m} ... t_{r,s_1} beta + e_r for r <= k < s_1 < ... < s_m
    // with 0 < beta_r < beta_{s_1} < ... < beta_{s_m}
    std::vector<Composition> out;
    int n = int(beta.size());
    auto push = [&](Composition g) {
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    };
    for (int r = 1; r <= std::min(k, n); ++r) {
        if (beta[r - 1] <= 0) continue;
        std::vector<int> chain;
        auto emit = [&]() {
            Composition g = beta;
            for (int s : chain) std::swap(g[r - 1], g[s - 1]);  // t_{r,s_1} acts first
            g[r - 1] += 1;
            push(std::move(g));
        };
        auto rec = [&](auto&& self, int from, int last_val) -> void {
            emit();
            for (int s = from; s <= n; ++s) {
                if (beta[s - 1] > last_val) {
                    chain.push_back(s);
                    self(self, s + 1, beta[s - 1]);
                    chain.pop_back();
                }
            }
        };
        rec(rec, k + 1, beta[r - 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool k_chain_leq(const Composition& beta, const Composition& gamma, int k) {
    if (beta.size() != gamma.size()) throw std::invalid_argument("k_chain_leq: length mismatch");
    if (beta == gamma) return true;
    if (total(gamma) <= total(beta)) return false;
    for (const auto& [next, step] : k_chain_covers(beta, k)) {
        if (k_chain_leq(next, gamma, k)) return true;
    }
    return false;
}

IteratedInsertResult iterated_insert(const Diagram& t, const Composition& beta, int k,
                                     const std::vector<int>& rows) {
    IteratedInsertResult out;
    out.diagram = t;
    Composition label = beta;
    out.alpha_chain.push_back(maximal_rectified_label(t, beta));
    for (int r : rows) {
        InsertResult step = insert_row(out.diagram, label, k, r);
        int c = step.trace.landing_column;
        // minimal extended row consistent with the new thread weight
        Composition theta = thread_weight(step.diagram, int(label.size()));
        std::optional<Composition> next;
        int srow = 0;
        for (Cell pos : k_addable_positions(label, k)) {
            if (pos.col != c) continue;
            Composition cand = k_addition(label, pos, k);
            if (left_swap_leq(theta, cand)) {
                next = cand;
                srow = pos.row;
                break;  // addable positions are sorted, so first hit is minimal row
            }
        }
        if (!next) throw std::logic_error("iterated_insert: no consistent k-addition in landing column");
        KChainStep chain_step;
        chain_step.added_column = c;
        chain_step.extended_row = srow;
        chain_step.before = label;
        chain_step.after = *next;
        out.chain.push_back(chain_step);
        out.traces.push_back(step.trace);
        out.diagram = step.diagram;
        label = *next;
        out.alpha_chain.push_back(maximal_rectified_label(out.diagram, label));
    }
    return out;
}

namespace {

// one forward step of the rectification relation at (d, x): land / bump / pass
struct ForwardStep {
    RectStep::Kind kind;
    Cell next{0, 0};  // bump: bumped cell; pass: target vacancy
};

std::optional<ForwardStep> forward_step(const Diagram& d, const Composition& alpha, Cell x, int k) {
    if (x.col == 1) return ForwardStep{RectStep::Kind::land, {0, 0}};
    AbutScan scan;
    if (!d.empty()) {
        try {
            scan = scan_abutments(semi_proper_closure(d, alpha), x, k);
        } catch (const std::invalid_argument&) {
            return std::nullopt;  // not in PKD(alpha): no forward step exists
        }
    }
    if (scan.rightmost) return ForwardStep{RectStep::Kind::land, {0, 0}};
    if (scan.any) return ForwardStep{RectStep::Kind::bump, *scan.lowest_bump};
    for (int c = x.col - 1; c >= 1; --c) {
        if (!d.contains({c, x.row})) return ForwardStep{RectStep::Kind::pass, {c, x.row}};
    }
    return std::nullopt;
}

std::optional<ExciseResult> try_excise_from(const Diagram& u, const Composition& beta, int k,
                                            Cell landing, const Composition& alpha) {
    Diagram d = u.without_cell(landing);
    Cell v = landing;
    while (true) {
        if (d.column_count(v.col) == 0) {
            // the vacancy escaped past all cells: v.row is the inserted row
            return ExciseResult{d, v.row};
        }
        // prefer undoing a bump: the highest cell above v in its column that
        // would have bumped exactly v
        std::vector<Cell> candidates;
        for (const Cell& z : d.cells()) {
            if (z.col == v.col && z.row > v.row && z.row <= k) candidates.push_back(z);
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Cell& a, const Cell& b) { return a.row > b.row; });
        bool undone = false;
        for (const Cell& z : candidates) {
            Diagram prev = d.with_cell(v).without_cell(z);
            if (!kd_membership(prev, alpha)) continue;
            auto step = forward_step(prev, alpha, z, k);
            if (step && step->kind == RectStep::Kind::bump && step->next == v) {
                d = prev;
                v = z;
                undone = true;
                break;
            }
        }
        if (undone) continue;
        // undo a pass: nearest vacancy to the right within the row
        Cell w{0, 0};
        for (int c = v.col + 1; c <= d.max_col() + 1; ++c) {
            if (!d.contains({c, v.row})) {
                w = {c, v.row};
                break;
            }
        }
        if (w.col == 0) return std::nullopt;
        v = w;
    }
}

}  // namespace

ExciseResult excise(const Diagram& u, const Composition& beta, int k) {
    if (int(u.size()) != total(beta) + 1)
        throw std::invalid_argument("excise: size of u must be |beta| + 1");
    Diagram db = composition_diagram(beta);
    int landing_col = 0;
    for (int c = 1; c <= std::max(u.max_col(), db.max_col()); ++c) {
        int diff = u.column_count(c) - db.column_count(c);
        if (diff == 1 && landing_col == 0)
            landing_col = c;
        else if (diff != 0)
            throw std::invalid_argument("excise: column counts do not differ by a single cell");
    }
    if (landing_col == 0) throw std::invalid_argument("excise: no landing column");

    // landing cell: highest cell weakly below row k in the landing column
    // whose removal leaves a diagram that lands back at it
    std::vector<Cell> column_cells;
    for (const Cell& c : u.cells()) {
        if (c.col == landing_col && c.row <= k) column_cells.push_back(c);
    }
    std::sort(column_cells.begin(), column_cells.end(),
              [](const Cell& a, const Cell& b) { return a.row > b.row; });
    for (const Cell& x : column_cells) {
        Diagram t = u.without_cell(x);
        if (!kd_membership(t, beta)) continue;
        Composition alpha;
        try {
            alpha = maximal_rectified_label(t, beta);
        } catch (const std::exception&) {
            continue;
        }
        auto step = forward_step(t, alpha, x, k);
        if (!(step && step->kind == RectStep::Kind::land)) continue;
        auto result = try_excise_from(u, beta, k, x, alpha);
        if (!result) continue;
        InsertResult check = insert_row(result->diagram, beta, k, result->row);
        if (check.diagram == u) return *result;
    }
    throw std::invalid_argument("excise: diagram is not an insertion image for beta");
}

}  // namespace kohnert
