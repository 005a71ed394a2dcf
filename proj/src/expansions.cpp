#include "kohnert/expansions.hpp"

#include <algorithm>
#include <set>

#include "kohnert/labeling.hpp"

namespace kohnert {

Polynomial Polynomial::constant(int nvars, Int c) {
    Polynomial p(nvars);
    p.add_term(Composition(nvars, 0), std::move(c));
    return p;
}

Polynomial Polynomial::monomial(const Composition& exponents, Int c) {
    Polynomial p(int(exponents.size()));
    p.add_term(exponents, std::move(c));
    return p;
}

void Polynomial::add_term(const Composition& e, Int c) {
    if (int(e.size()) != nvars_) throw std::invalid_argument("polynomial: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, std::move(c));
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Composition e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(Int c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

namespace {

Composition pad(const Composition& a, int m) {
    if (int(a.size()) > m) throw std::invalid_argument("variable count below composition length");
    Composition out = a;
    out.resize(m, 0);
    return out;
}

Polynomial weight_generating(const std::vector<Diagram>& family, int length, int m) {
    Polynomial p(m);
    for (const Diagram& d : family) p.add_term(pad(diagram_weight(d, length), m), 1);
    return p;
}

}  // namespace

Polynomial demazure_char(const Composition& alpha, int m, int budget) {
    return weight_generating(kohnert_diagrams(alpha, budget), int(alpha.size()), m);
}

Polynomial schur(const Composition& lambda, int m) {
    int k = int(lambda.size());
    if (m < 0) m = k;
    Polynomial p(m);
    for (const ReverseTableau& t : generate_ssrt(lambda)) {
        Composition wt(k, 0);
        for (const auto& row : t.rows)
            for (int e : row) wt[e - 1] += 1;
        p.add_term(pad(wt, m), 1);
    }
    return p;
}

Polynomial atom_poly(const Composition& alpha, int m, int budget) {
    return weight_generating(atomic_kohnert_diagrams(alpha, budget), int(alpha.size()), m);
}

Polynomial pinned_poly(const Composition& alpha, int m, int budget) {
    return weight_generating(pinned_kohnert_diagrams(alpha, budget), int(alpha.size()), m);
}

std::vector<Composition> OrderIdeal::members() const {
    std::set<Composition> out;
    for (const Composition& g : generators) {
        for (const Composition& a : left_swap_down_set(g)) out.insert(a);
    }
    return {out.begin(), out.end()};
}

bool OrderIdeal::contains(const Composition& a) const {
    for (const Composition& g : generators) {
        if (a.size() == g.size() && left_swap_leq(a, g)) return true;
    }
    return false;
}

Polynomial schubert_char(const OrderIdeal& ideal, int m, int budget) {
    Polynomial p(m);
    for (const Composition& a : ideal.members()) p += atom_poly(a, m, budget);
    return p;
}

std::vector<Composition> key_to_atom(const Composition& beta) {
    return left_swap_down_set(beta);
}

PinnedDecompositions pinned_decompositions(const Composition& gamma) {
    PinnedDecompositions out;
    auto down = left_swap_down_set(gamma);
    std::set<Composition> in_down(down.begin(), down.end());
    for (const Composition& b : down) {
        bool maximal = true;
        for (const Composition& a : pinned_swap_up_set(b)) {
            if (a != b && in_down.count(a)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.key_to_pinned.push_back(b);
    }
    out.pinned_to_atom = pinned_swap_down_set(gamma);
    return out;
}

std::map<Composition, long long> atom_expansion(const Composition& beta, const Composition& lambda,
                                                int k, int budget) {
    if (!is_partition(lambda)) throw std::invalid_argument("atom_expansion: lambda not a partition");
    if (k < 0) k = int(lambda.size());
    std::map<Composition, long long> counts;
    auto tableaux = generate_ssrt(lambda);
    std::vector<std::vector<int>> words;
    for (const ReverseTableau& r : tableaux) {
        std::vector<int> rows;
        for (const auto& [q, rr] : tableau_to_biword(r).pairs) rows.push_back(rr);
        words.push_back(std::move(rows));
    }
    for (const Diagram& t : kohnert_diagrams(beta, budget)) {
        for (const auto& word : words) {
            IteratedInsertResult run = iterated_insert(t, beta, k, word);
            Composition theta = run.diagram.empty() ? beta : thread_weight(run.diagram, int(beta.size()));
            counts[theta] += 1;
        }
    }
    std::map<Composition, long long> out;
    for (const auto& [gamma, n] : counts) {
        long long size = (long long)atomic_kohnert_diagrams(gamma, budget).size();
        if (n % size != 0)
            throw std::logic_error("atom_expansion: pair count not divisible by |AKD| at " + to_string(gamma));
        out[gamma] = n / size;
    }
    return out;
}

long long lat_coefficient(const Composition& alpha, const Composition& beta,
                          const Composition& lambda, int k) {
    // each insertion run belongs to a single ordered-column family, so the
    // coefficient adds up per-family counts; within one family the count is
    // independent of the witnessing chain (asserted)
    std::map<std::vector<int>, long long> per_family;
    for (const ChainData& chain : k_addition_chains(beta, k, total(lambda))) {
        if (!left_swap_leq(alpha, chain.gamma)) continue;
        long long n = (long long)enumerate_lat(alpha, beta, chain.steps, lambda, k).size();
        auto it = per_family.find(chain.columns);
        if (it == per_family.end())
            per_family[chain.columns] = n;
        else if (it->second != n)
            throw std::logic_error("lat_coefficient: family-dependent count at " + to_string(alpha));
    }
    long long result = 0;
    for (const auto& [cols, n] : per_family) result += n;
    return result;
}

Composition kd_intersection(const std::vector<Composition>& gammas) {
    if (gammas.empty()) throw std::invalid_argument("kd_intersection: empty family");
    auto first_down = left_swap_down_set(gammas[0]);
    std::set<Composition> common(first_down.begin(), first_down.end());
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        if (gammas[i].size() != gammas[0].size())
            throw std::invalid_argument("kd_intersection: length mismatch");
        auto down = left_swap_down_set(gammas[i]);
        std::set<Composition> next;
        for (const Composition& a : down) {
            if (common.count(a)) next.insert(a);
        }
        common = std::move(next);
    }
    if (common.empty()) throw std::invalid_argument("kd_intersection: no common lower bound");
    std::vector<Composition> maximal;
    for (const Composition& a : common) {
        bool top = true;
        for (const Composition& b : common) {
            if (a != b && left_swap_leq(a, b)) top = false;
        }
        if (top) maximal.push_back(a);
    }
    if (maximal.size() != 1)
        throw std::logic_error("kd_intersection: maximum not unique");
    return maximal[0];
}

Composition kd_intersection_single_column(const Composition& beta, int column,
                                          const std::vector<int>& rows, int k) {
    if (rows.empty()) throw std::invalid_argument("kd_intersection_single_column: no rows");
    std::vector<int> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    Composition out = k_addition(beta, {column, sorted.back()}, k);
    // t_{r_1,r_2} ... t_{r_{m-1},r_m} applied to beta +_k (c, r_m)
    for (int i = int(sorted.size()) - 2; i >= 0; --i) {
        std::swap(out[sorted[i] - 1], out[sorted[i + 1] - 1]);
    }
    return out;
}

OrderIdeal gamma_ideal(const Composition& beta, int k, const std::vector<int>& columns) {
    std::set<Composition> endpoints;
    std::function<void(const Composition&, std::size_t)> rec = [&](const Composition& cur, std::size_t i) {
        if (i == columns.size()) {
            endpoints.insert(cur);
            return;
        }
        for (Cell pos : k_addable_positions(cur, k)) {
            if (pos.col == columns[i]) rec(k_addition(cur, pos, k), i + 1);
        }
    };
    rec(beta, 0);
    if (endpoints.empty()) throw std::invalid_argument("gamma_ideal: column sequence not realizable");
    OrderIdeal ideal;
    ideal.generators.assign(endpoints.begin(), endpoints.end());
    return ideal;
}

namespace {

struct ChainGroup {
    std::vector<int> columns;
    std::vector<ChainData> chains;
    std::vector<Composition> gammas;  // distinct endpoints
};

std::vector<ChainGroup> grouped_chains(const Composition& beta, const Composition& lambda, int k) {
    std::map<std::vector<int>, ChainGroup> groups;
    for (const ChainData& chain : k_addition_chains(beta, k, total(lambda))) {
        ChainGroup& g = groups[chain.columns];
        g.columns = chain.columns;
        if (std::find(g.gammas.begin(), g.gammas.end(), chain.gamma) == g.gammas.end()) {
            g.gammas.push_back(chain.gamma);
            g.chains.push_back(chain);
        }
    }
    std::vector<ChainGroup> out;
    for (auto& [cols, g] : groups) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<SchubertTerm> schubert_expansion(const Composition& beta, const Composition& lambda, int k) {
    if (!is_partition(lambda)) throw std::invalid_argument("schubert_expansion: lambda not a partition");
    if (k < 0) k = int(lambda.size());
    std::vector<SchubertTerm> out;
    for (const ChainGroup& g : grouped_chains(beta, lambda, k)) {
        SchubertTerm term;
        term.columns = g.columns;
        term.ideal = gamma_ideal(beta, k, g.columns);
        long long coeff = -1;
        for (std::size_t i = 0; i < g.chains.size(); ++i) {
            long long n =
                (long long)enumerate_lat(g.gammas[i], beta, g.chains[i].steps, lambda, k).size();
            if (coeff < 0)
                coeff = n;
            else if (coeff != n)
                throw std::logic_error("schubert_expansion: group members disagree on |LAT|");
        }
        term.coefficient = coeff;
        if (term.coefficient > 0) out.push_back(std::move(term));
    }
    return out;
}

std::map<Composition, long long> signed_key_expansion(const Composition& beta, const Composition& lambda,
                                                      int k, bool grouped) {
    if (!is_partition(lambda)) throw std::invalid_argument("signed_key_expansion: lambda not a partition");
    if (k < 0) k = int(lambda.size());
    auto groups = grouped_chains(beta, lambda, k);
    if (!grouped) {
        // experimental ungrouped reading: one group holding every endpoint
        ChainGroup all;
        for (const ChainGroup& g : groups) {
            for (std::size_t i = 0; i < g.gammas.size(); ++i) {
                if (std::find(all.gammas.begin(), all.gammas.end(), g.gammas[i]) == all.gammas.end()) {
                    all.gammas.push_back(g.gammas[i]);
                    all.chains.push_back(g.chains[i]);
                }
            }
        }
        groups = {all};
    }
    std::map<Composition, long long> signed_terms;
    for (const ChainGroup& g : groups) {
        // comparable endpoints have nested closures, so only the maximal
        // ones carry the union; keeping them makes the result cancellation-free
        std::vector<Composition> tops;
        std::vector<std::size_t> top_index;
        for (std::size_t i = 0; i < g.gammas.size(); ++i) {
            bool maximal = true;
            for (const Composition& other : g.gammas) {
                if (other != g.gammas[i] && left_swap_leq(g.gammas[i], other)) maximal = false;
            }
            if (maximal) {
                tops.push_back(g.gammas[i]);
                top_index.push_back(i);
            }
        }
        long long magnitude = -1;
        for (std::size_t i : top_index) {
            long long n = (long long)enumerate_lkt(beta, g.chains[i].steps, lambda, k).size();
            if (magnitude < 0)
                magnitude = n;
            else if (magnitude != n)
                throw std::logic_error("signed_key_expansion: group members disagree on |LKT|");
        }
        if (magnitude <= 0) continue;
        int m = int(tops.size());
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<Composition> subset;
            for (int i = 0; i < m; ++i) {
                if (mask & (1u << i)) subset.push_back(tops[std::size_t(i)]);
            }
            Composition target = kd_intersection(subset);
            long long sign = (subset.size() % 2 == 1) ? 1 : -1;
            signed_terms[target] += sign * magnitude;
        }
    }
    // endpoints of one group can reappear as meets of another group with the
    // same column multiset; those contributions cancel exactly
    for (auto it = signed_terms.begin(); it != signed_terms.end();) {
        it = (it->second == 0) ? signed_terms.erase(it) : std::next(it);
    }
    return signed_terms;
}

bool is_k_positive(const Composition& beta, int k) {
    int n = int(beta.size());
    for (int r = 1; r <= std::min(k, n); ++r) {
        for (int t = k + 1; t <= n; ++t) {
            if (beta[r - 1] > beta[t - 1]) continue;
            for (int s = r + 1; s <= std::min(k, n); ++s) {
                if (beta[s - 1] < beta[r - 1]) return false;
            }
        }
    }
    return true;
}

std::map<Composition, Int> atom_basis_solve(const Polynomial& p, int degree, int m, int budget) {
    if (p.nvars() != m) throw std::invalid_argument("atom_basis_solve: variable count mismatch");
    for (const auto& [e, c] : p.terms()) {
        if (total(e) != degree) throw std::invalid_argument("atom_basis_solve: polynomial not homogeneous");
    }
    // candidates: all weak compositions of the degree with the given length
    std::vector<Composition> candidates;
    Composition cur(m, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
        if (pos == m - 1) {
            cur[pos] = left;
            candidates.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            gen(pos + 1, left - v);
        }
    };
    if (m == 0) {
        if (degree == 0) candidates.push_back({});
    } else {
        gen(0, degree);
    }
    std::vector<Polynomial> atoms;
    for (const Composition& a : candidates) atoms.push_back(atom_poly(a, m, budget));
    // monomial index
    std::map<Composition, int> mono_index;
    for (const Polynomial& a : atoms) {
        for (const auto& [e, c] : a.terms()) mono_index.emplace(e, int(mono_index.size()));
    }
    for (const auto& [e, c] : p.terms()) mono_index.emplace(e, int(mono_index.size()));
    int rows = int(mono_index.size());
    int cols = int(candidates.size());
    // fraction-free Gaussian elimination on [A | b]
    std::vector<std::vector<Int>> mat(rows, std::vector<Int>(cols + 1, 0));
    for (int j = 0; j < cols; ++j) {
        for (const auto& [e, c] : atoms[j].terms()) mat[mono_index.at(e)][j] = c;
    }
    for (const auto& [e, c] : p.terms()) mat[mono_index.at(e)][cols] = c;
    std::vector<int> pivot_row(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i) {
            if (mat[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(mat[row], mat[sel]);
        for (int i = 0; i < rows; ++i) {
            if (i == row || mat[i][col] == 0) continue;
            Int f1 = mat[row][col], f2 = mat[i][col];
            for (int j = 0; j <= cols; ++j) mat[i][j] = mat[i][j] * f1 - mat[row][j] * f2;
        }
        pivot_row[col] = row;
        ++row;
    }
    for (int i = row; i < rows; ++i) {
        if (mat[i][cols] != 0) throw std::logic_error("atom_basis_solve: inconsistent system");
    }
    std::map<Composition, Int> out;
    for (int col = 0; col < cols; ++col) {
        if (pivot_row[col] < 0) throw std::logic_error("atom_basis_solve: atom matrix is singular");
        Int num = mat[pivot_row[col]][cols];
        Int den = mat[pivot_row[col]][col];
        if (num % den != 0) throw std::logic_error("atom_basis_solve: non-integer coefficient");
        Int v = num / den;
        if (v != 0) out[candidates[col]] = v;
    }
    return out;
}

}  // namespace kohnert
