#include "kohnert/tableaux.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>
#include <functional>

#include "kohnert/labeling.hpp"

namespace kohnert {

std::vector<ReverseTableau> generate_ssrt(const Composition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("generate_ssrt: not a partition");
    int m = int(lambda.size());
    ReverseTableau t;
    t.shape = lambda;
    t.rows.assign(m, {});
    for (int i = 0; i < m; ++i) t.rows[i].assign(lambda[i], 0);
    std::vector<ReverseTableau> out;
    // fill rows top to bottom, left to right
    std::function<void(int, int)> rec = [&](int row, int col) {
        while (row >= 1 && col > lambda[row - 1]) {
            --row;
            col = 1;
        }
        if (row < 1) {
            out.push_back(t);
            return;
        }
        int hi = m;
        if (col > 1) hi = std::min(hi, t.rows[row - 1][col - 2]);  // weakly decreasing row
        if (row < m && lambda[row] >= col) hi = std::min(hi, t.rows[row][col - 1] - 1);  // strict column
        for (int e = hi; e >= 1; --e) {
            t.rows[row - 1][col - 1] = e;
            rec(row, col + 1);
        }
        t.rows[row - 1][col - 1] = 0;
    };
    rec(m, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<ReverseTableau, Cell> rsk_insert(const ReverseTableau& p, int r) {
    if (!is_reverse_tableau(p)) throw std::invalid_argument("rsk_insert: malformed tableau");
    int m = int(p.shape.size());
    if (r < 1 || r > m) throw std::invalid_argument("rsk_insert: entry out of range");
    ReverseTableau t = p;
    int v = r;
    for (int row = m; row >= 1; --row) {
        auto& line = t.rows[row - 1];
        bool bumped = false;
        for (std::size_t j = 0; j < line.size(); ++j) {
            if (line[j] < v) {
                std::swap(line[j], v);
                bumped = true;
                break;
            }
        }
        if (!bumped) {
            line.push_back(v);
            t.shape[row - 1] += 1;
            return {t, Cell{int(line.size()), row}};
        }
    }
    throw std::logic_error("rsk_insert: fell off the bottom row");
}

std::pair<ReverseTableau, int> rsk_reverse(const ReverseTableau& p, Cell c) {
    int m = int(p.shape.size());
    if (c.row < 1 || c.row > m || p.shape[c.row - 1] != c.col)
        throw std::invalid_argument("rsk_reverse: cell is not the end of its row");
    if (c.row > 1 && p.shape[c.row - 2] >= c.col)
        throw std::invalid_argument("rsk_reverse: cell is not an outer corner");
    ReverseTableau t = p;
    int v = t.rows[c.row - 1].back();
    t.rows[c.row - 1].pop_back();
    t.shape[c.row - 1] -= 1;
    for (int row = c.row + 1; row <= m; ++row) {
        auto& line = t.rows[row - 1];
        int pick = -1;
        for (int j = int(line.size()) - 1; j >= 0; --j) {
            if (line[j] > v) {
                pick = j;
                break;
            }
        }
        if (pick < 0) throw std::invalid_argument("rsk_reverse: no entry to unbump");
        std::swap(line[pick], v);
    }
    return {t, v};
}

TwoLineArray tableau_to_biword(const ReverseTableau& r) {
    if (!is_reverse_tableau(r)) throw std::invalid_argument("tableau_to_biword: malformed tableau");
    ReverseTableau t = r;
    int m = int(r.shape.size());
    std::vector<std::pair<int, int>> rev;
    for (int q = 1; q <= m; ++q) {
        for (int c = r.shape[q - 1]; c >= 1; --c) {
            auto [next, val] = rsk_reverse(t, {c, q});
            rev.push_back({q, val});
            t = std::move(next);
        }
    }
    TwoLineArray out;
    out.pairs.assign(rev.rbegin(), rev.rend());
    return out;
}

std::vector<Cell> skew_cells(const Composition& alpha, const std::vector<KChainStep>& chain) {
    if (chain.empty()) return {};
    const Composition& gamma = chain.back().after;
    if (!left_swap_leq(alpha, gamma)) throw std::invalid_argument("skew_cells: alpha not below gamma");
    auto res = proper_labeling(composition_diagram(alpha), gamma);
    if (!res.ok()) throw std::invalid_argument("skew_cells: D(alpha) has no labeling of shape gamma");
    std::vector<Cell> out;
    for (const KChainStep& s : chain) {
        auto cell = res.labeling.cell_with_label(s.added_column, s.extended_row);
        if (!cell) throw std::logic_error("skew_cells: missing labeled cell");
        out.push_back(*cell);
    }
    return out;
}

Composition SkewTableau::weight(int length) const {
    Composition w(length, 0);
    for (const auto& [cell, e] : entries) {
        if (e < 1 || e > length) throw std::invalid_argument("skew weight: entry out of range");
        w[e - 1] += 1;
    }
    return w;
}


namespace {

// Recording values weakly decrease over an insertion run, and equal values
// land in strictly increasing columns (row bumping), so a filling has a
// unique candidate time order: entries descending, columns ascending within
// an entry. It is a lattice key tableau exactly when replaying that order
// from the base is a chain of k-additions ending at the ambient shape.
bool cells_form_addition_chain(const Composition& base, const Composition& ambient, int k,
                               std::vector<std::pair<Cell, int>> cells) {
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        if (a.first.col != b.first.col) return a.first.col < b.first.col;
        return a.first.row < b.first.row;
    });
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (cells[i].second == cells[i + 1].second && cells[i].first.col == cells[i + 1].first.col)
            return false;  // one phase cannot add twice in a column
    }
    Composition sigma = base;
    for (const auto& [cell, e] : cells) {
        if (cell.row > k) return false;
        auto addable = k_addable_positions(sigma, k);
        if (std::find(addable.begin(), addable.end(), cell) == addable.end()) return false;
        sigma = k_addition(sigma, cell, k);
    }
    return sigma == ambient;
}

}  // namespace

bool is_key(const SkewTableau& t) {
    for (const auto& [cell, e] : t.entries) {
        if (cell.row > t.k || e < 1) return false;
    }
    std::vector<std::pair<Cell, int>> cells(t.entries.begin(), t.entries.end());
    return cells_form_addition_chain(t.base, t.ambient, t.k, std::move(cells));
}

bool is_atomic(const SkewTableau& t) {
    // validity transports along the added-cell correspondence (the map
    // preserves columns, so lattice and phase conditions agree on both sides)
    for (const auto& [cell, e] : t.entries) {
        if (cell.row > t.k || e < 1) return false;
    }
    if (t.chain.empty()) return t.entries.empty();
    std::vector<Cell> cells;
    try {
        cells = skew_cells(t.ambient, t.chain);
    } catch (const std::exception&) {
        return false;
    }
    std::set<Cell> cell_set(cells.begin(), cells.end());
    std::set<Cell> entry_set;
    for (const auto& [c, e] : t.entries) entry_set.insert(c);
    if (cell_set != entry_set) return false;
    std::vector<std::pair<Cell, int>> key_cells;
    for (std::size_t i = 0; i < t.chain.size(); ++i) {
        const KChainStep& s = t.chain[i];
        key_cells.push_back({{s.added_column, s.extended_row}, t.entries.at(cells[i])});
    }
    const Composition& gamma = t.chain.back().after;
    return cells_form_addition_chain(t.base, gamma, t.k, std::move(key_cells));
}

bool is_lattice(const SkewTableau& t) {
    int maxq = 0, maxc = 0;
    for (const auto& [cell, e] : t.entries) {
        maxq = std::max(maxq, e);
        maxc = std::max(maxc, cell.col);
    }
    for (int q = 2; q <= maxq; ++q) {
        for (int c = 1; c <= maxc; ++c) {
            int lo = 0, hi = 0;
            for (const auto& [cell, e] : t.entries) {
                if (cell.col < c) continue;
                if (e == q - 1) ++lo;
                if (e == q) ++hi;
            }
            if (lo > hi) return false;
        }
    }
    return true;
}

bool is_lattice_partition_reading(const SkewTableau& t) {
    int maxq = 0, maxc = 0;
    for (const auto& [cell, e] : t.entries) {
        maxq = std::max(maxq, e);
        maxc = std::max(maxc, cell.col);
    }
    for (int c = 1; c <= maxc; ++c) {
        Composition w(std::max(maxq, 1), 0);
        for (const auto& [cell, e] : t.entries) {
            if (cell.col >= c) w[e - 1] += 1;
        }
        if (!is_partition(w)) return false;
    }
    return true;
}

SkewTableau atomic_to_key(const SkewTableau& atomic) {
    if (atomic.key_variant) throw std::invalid_argument("atomic_to_key: already a key tableau");
    std::vector<Cell> cells = skew_cells(atomic.ambient, atomic.chain);
    SkewTableau out;
    out.chain = atomic.chain;
    out.base = atomic.base;
    out.ambient = atomic.chain.empty() ? atomic.ambient : atomic.chain.back().after;
    out.k = atomic.k;
    out.key_variant = true;
    for (std::size_t i = 0; i < atomic.chain.size(); ++i) {
        const KChainStep& s = atomic.chain[i];
        out.entries[{s.added_column, s.extended_row}] = atomic.entries.at(cells[i]);
    }
    return out;
}

SkewTableau key_to_atomic(const SkewTableau& key, const Composition& alpha) {
    if (!key.key_variant) throw std::invalid_argument("key_to_atomic: not a key tableau");
    std::vector<Cell> cells = skew_cells(alpha, key.chain);
    SkewTableau out;
    out.chain = key.chain;
    out.base = key.base;
    out.ambient = alpha;
    out.k = key.k;
    out.key_variant = false;
    for (std::size_t i = 0; i < key.chain.size(); ++i) {
        const KChainStep& s = key.chain[i];
        out.entries[cells[i]] = key.entries.at({s.added_column, s.extended_row});
    }
    return out;
}

namespace {

// Fillings are enumerated against the chain itself: recording values weakly
// decrease along the steps and equal values use strictly increasing columns,
// which makes every assignment a replay of the very chain it fills.
std::vector<SkewTableau> enumerate_fillings(const SkewTableau& prototype, const std::vector<Cell>& cells,
                                            const Composition& lambda) {
    std::vector<SkewTableau> out;
    if (cells.size() != std::size_t(total(lambda))) return out;
    std::vector<int> letters;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) letters.push_back(int(i) + 1);
    }
    std::sort(letters.begin(), letters.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < letters.size() && ok; ++i) {
            if (letters[i] < letters[i + 1]) ok = false;  // must weakly decrease in time
            if (letters[i] == letters[i + 1] &&
                prototype.chain[i].added_column >= prototype.chain[i + 1].added_column)
                ok = false;  // one phase moves strictly right
        }
        if (!ok) continue;
        SkewTableau t = prototype;
        for (std::size_t i = 0; i < cells.size(); ++i) t.entries[cells[i]] = letters[i];
        if (is_lattice(t)) out.push_back(std::move(t));
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<SkewTableau> enumerate_lat(const Composition& alpha, const Composition& beta,
                                       const std::vector<KChainStep>& chain, const Composition& lambda,
                                       int k) {
    SkewTableau proto;
    proto.chain = chain;
    proto.base = beta;
    proto.ambient = alpha;
    proto.k = k;
    proto.key_variant = false;
    return enumerate_fillings(proto, skew_cells(alpha, chain), lambda);
}

std::vector<SkewTableau> enumerate_lkt(const Composition& beta, const std::vector<KChainStep>& chain,
                                       const Composition& lambda, int k) {
    SkewTableau proto;
    proto.chain = chain;
    proto.base = beta;
    proto.ambient = chain.empty() ? beta : chain.back().after;
    proto.k = k;
    proto.key_variant = true;
    std::vector<Cell> cells;
    for (const KChainStep& s : chain) cells.push_back({s.added_column, s.extended_row});
    return enumerate_fillings(proto, cells, lambda);
}

SkewTableau record(const IteratedInsertResult& run, const Composition& beta, int k,
                   const TwoLineArray& biword) {
    if (biword.pairs.size() != run.chain.size())
        throw std::invalid_argument("record: biword and chain lengths differ");
    SkewTableau out;
    out.chain = run.chain;
    out.base = beta;
    out.ambient = run.diagram.empty() ? beta : thread_weight(run.diagram, int(beta.size()));
    out.k = k;
    out.key_variant = false;
    std::vector<Cell> cells = skew_cells(out.ambient, run.chain);
    for (std::size_t i = 0; i < cells.size(); ++i) out.entries[cells[i]] = biword.pairs[i].first;
    return out;
}

std::vector<ChainData> k_addition_chains(const Composition& beta, int k, int length) {
    std::vector<ChainData> out;
    ChainData cur;
    cur.gamma = beta;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == length) {
            out.push_back(cur);
            return;
        }
        for (const auto& [next, step] : k_chain_covers(cur.gamma, k)) {
            cur.steps.push_back(step);
            cur.columns.push_back(step.added_column);
            Composition saved = cur.gamma;
            cur.gamma = next;
            rec(depth + 1);
            cur.gamma = saved;
            cur.columns.pop_back();
            cur.steps.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace kohnert
