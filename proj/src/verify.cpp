#include "kohnert/verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "kohnert/core.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/labeling.hpp"

namespace kohnert::verify {

namespace {

using clock_type = std::chrono::steady_clock;

struct Failures {
    std::mutex mutex;
    std::string first;
    std::atomic<long long> checked{0};

    void record(const std::string& what) {
        std::lock_guard<std::mutex> lock(mutex);
        if (first.empty()) first = what;
    }
    bool ok() const { return first.empty(); }
};

CheckResult finish(const std::string& name, Failures& f, clock_type::time_point t0) {
    CheckResult r;
    r.name = name;
    r.pass = f.ok();
    r.checked = f.checked.load();
    r.detail = f.first;
    r.seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return r;
}

std::vector<Composition> compositions_up_to(int length, int max_part) {
    std::vector<Composition> out;
    Composition cur(length, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < length && cur[i] == max_part) cur[i++] = 0;
        if (i == length) break;
        cur[i] += 1;
    }
    return out;
}

}  // namespace

std::vector<Composition> grid_betas(const GridSpec& g) {
    return compositions_up_to(g.length, g.parts);
}

std::vector<Composition> grid_lambdas(const GridSpec& g) {
    std::vector<Composition> out;
    for (int len = 1; len <= g.length; ++len) {
        for (const Composition& l : compositions_up_to(len, g.cells)) {
            if (is_partition(l) && total(l) <= g.cells) out.push_back(l);
        }
    }
    return out;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, n);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

CheckResult check_decomposition(const GridSpec& g) {
    auto t0 = clock_type::now();
    Failures f;
    auto betas = compositions_up_to(g.length, 3);
    parallel_for(int(betas.size()), g.jobs, [&](int i) {
        const Composition& b = betas[std::size_t(i)];
        int m = int(b.size());
        try {
            auto kd = kohnert_diagrams(b);
            std::set<Diagram> seen;
            std::size_t count = 0;
            for (const Composition& a : left_swap_down_set(b)) {
                for (const Diagram& d : atomic_kohnert_diagrams(a)) {
                    if (!seen.insert(d).second) {
                        f.record("duplicate atomic diagram below " + to_string(b));
                        return;
                    }
                    ++count;
                }
            }
            if (count != kd.size() || seen != std::set<Diagram>(kd.begin(), kd.end())) {
                f.record("KD(" + to_string(b) + ") is not the disjoint union of its atoms");
                return;
            }
            Polynomial atoms(m);
            for (const Composition& a : key_to_atom(b)) atoms += atom_poly(a, m);
            if (!(atoms == demazure_char(b, m))) {
                f.record("atom decomposition fails at " + to_string(b));
                return;
            }
            PinnedDecompositions dec = pinned_decompositions(b);
            Polynomial pinned_sum(m);
            for (const Composition& p : dec.key_to_pinned) pinned_sum += pinned_poly(p, m);
            if (!(pinned_sum == demazure_char(b, m))) {
                f.record("pinned decomposition of the character fails at " + to_string(b));
                return;
            }
            Polynomial atom_sum(m);
            for (const Composition& a : dec.pinned_to_atom) atom_sum += atom_poly(a, m);
            if (!(atom_sum == pinned_poly(b, m))) {
                f.record("atom decomposition of the pinned polynomial fails at " + to_string(b));
                return;
            }
            f.checked += 1;
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + ": " + e.what());
        }
    });
    return finish("decomposition identities", f, t0);
}

namespace {

struct GridCase {
    Composition beta;
    Composition lambda;
};

std::vector<GridCase> grid_cases(const GridSpec& g) {
    std::vector<GridCase> cases;
    for (const Composition& b : grid_betas(g)) {
        for (const Composition& l : grid_lambdas(g)) {
            if (int(l.size()) <= int(b.size())) cases.push_back({b, l});
        }
    }
    return cases;
}

}  // namespace

CheckResult check_atom_expansion(const GridSpec& g) {
    auto t0 = clock_type::now();
    Failures f;
    auto cases = grid_cases(g);
    parallel_for(int(cases.size()), g.jobs, [&](int i) {
        const auto& [b, l] = cases[std::size_t(i)];
        int m = int(b.size());
        int k = int(l.size());
        try {
            auto coeffs = atom_expansion(b, l, k);
            Polynomial sum(m);
            for (const auto& [gamma, c] : coeffs) {
                if (c <= 0) {
                    f.record("nonpositive atom coefficient at " + to_string(b) + " x " + to_string(l));
                    return;
                }
                Polynomial a = atom_poly(gamma, m);
                a *= Int(c);
                sum += a;
            }
            if (!(sum == demazure_char(b, m) * schur(l, m))) {
                f.record("atom expansion mismatch at " + to_string(b) + " x " + to_string(l));
                return;
            }
            f.checked += 1;
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + " x " + to_string(l) + ": " + e.what());
        }
    });
    return finish("atom expansion", f, t0);
}

CheckResult check_schubert_expansion(const GridSpec& g) {
    auto t0 = clock_type::now();
    Failures f;
    auto cases = grid_cases(g);
    parallel_for(int(cases.size()), g.jobs, [&](int i) {
        const auto& [b, l] = cases[std::size_t(i)];
        int m = int(b.size());
        int k = int(l.size());
        try {
            auto terms = schubert_expansion(b, l, k);
            Polynomial sum(m);
            for (const SchubertTerm& t : terms) {
                if (t.coefficient <= 0) {
                    f.record("nonpositive Schubert coefficient at " + to_string(b) + " x " + to_string(l));
                    return;
                }
                Polynomial s = schubert_char(t.ideal, m);
                s *= Int(t.coefficient);
                sum += s;
            }
            if (!(sum == demazure_char(b, m) * schur(l, m))) {
                f.record("Schubert expansion mismatch at " + to_string(b) + " x " + to_string(l));
                return;
            }
            f.checked += 1;
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + " x " + to_string(l) + ": " + e.what());
        }
    });
    return finish("Schubert character expansion", f, t0);
}

CheckResult check_signed_expansion(const GridSpec& g) {
    auto t0 = clock_type::now();
    Failures f;
    auto cases = grid_cases(g);
    parallel_for(int(cases.size()), g.jobs, [&](int i) {
        const auto& [b, l] = cases[std::size_t(i)];
        int m = int(b.size());
        int k = int(l.size());
        try {
            auto coeffs = signed_key_expansion(b, l, k);
            Polynomial sum(m);
            bool nonneg = true;
            for (const auto& [gamma, c] : coeffs) {
                if (c < 0) nonneg = false;
                Polynomial key = demazure_char(gamma, m);
                key *= Int(c);
                sum += key;
            }
            if (!(sum == demazure_char(b, m) * schur(l, m))) {
                f.record("signed expansion mismatch at " + to_string(b) + " x " + to_string(l));
                return;
            }
            if (is_k_positive(b, k) && !nonneg) {
                f.record("negative coefficient for k-positive " + to_string(b) + " x " + to_string(l));
                return;
            }
            f.checked += 1;
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + " x " + to_string(l) + ": " + e.what());
        }
    });
    return finish("signed Demazure expansion", f, t0);
}

CheckResult check_intersections(int max_total_cells) {
    auto t0 = clock_type::now();
    Failures f;
    std::vector<Composition> betas;
    for (int len = 2; len <= 4; ++len) {
        for (const Composition& b : compositions_up_to(len, max_total_cells - 1)) {
            if (total(b) <= max_total_cells - 1) betas.push_back(b);
        }
    }
    parallel_for(int(betas.size()), 1, [&](int i) {
        const Composition& b = betas[std::size_t(i)];
        for (int k = 1; k <= int(b.size()); ++k) {
            auto addable = k_addable_positions(b, k);
            for (std::size_t x = 0; x < addable.size(); ++x) {
                for (std::size_t y = x + 1; y < addable.size(); ++y) {
                    if (addable[x].col != addable[y].col) continue;
                    try {
                        Composition g1 = k_addition(b, addable[x], k);
                        Composition g2 = k_addition(b, addable[y], k);
                        Composition meet = kd_intersection({g1, g2});
                        if (meet != kd_intersection_single_column(
                                        b, addable[x].col, {addable[x].row, addable[y].row}, k)) {
                            f.record("fold formula disagrees at " + to_string(b));
                            return;
                        }
                        auto kdm = kohnert_diagrams(meet);
                        std::set<Diagram> lhs(kdm.begin(), kdm.end());
                        auto kd2 = kohnert_diagrams(g2);
                        std::set<Diagram> kd2set(kd2.begin(), kd2.end());
                        std::set<Diagram> rhs;
                        for (const Diagram& d : kohnert_diagrams(g1)) {
                            if (kd2set.count(d)) rhs.insert(d);
                        }
                        if (lhs != rhs) {
                            f.record("closure intersection differs at " + to_string(b) + " column " +
                                     std::to_string(addable[x].col));
                            return;
                        }
                        f.checked += 1;
                    } catch (const std::exception& e) {
                        f.record(std::string("exception at ") + to_string(b) + ": " + e.what());
                        return;
                    }
                }
            }
        }
    });
    return finish("closure intersections", f, t0);
}

CheckResult check_counting(const GridSpec& g) {
    auto t0 = clock_type::now();
    Failures f;
    auto cases = grid_cases(g);
    parallel_for(int(cases.size()), g.jobs, [&](int i) {
        const auto& [b, l] = cases[std::size_t(i)];
        int k = int(l.size());
        try {
            auto chains = k_addition_chains(b, k, total(l));
            // per-family counts; each run lives in one ordered-column family
            std::map<std::vector<int>, std::map<Composition, long long>> family_counts;
            for (const ChainData& chain : chains) {
                for (const Composition& a : left_swap_down_set(chain.gamma)) {
                    long long n = (long long)enumerate_lat(a, b, chain.steps, l, k).size();
                    auto& family = family_counts[chain.columns];
                    auto it = family.find(a);
                    if (it == family.end())
                        family[a] = n;
                    else if (it->second != n) {
                        f.record("family count depends on the chain at " + to_string(b) + " x " +
                                 to_string(l));
                        return;
                    }
                }
            }
            // Schubert coefficients are constant over each ideal
            for (const auto& [cols, counts] : family_counts) {
                long long value = -1;
                for (const auto& [a, n] : counts) {
                    if (value < 0) value = n;
                    if (n != value) {
                        f.record("|LAT| varies inside an ideal at " + to_string(b) + " x " +
                                 to_string(l));
                        return;
                    }
                }
            }
            std::map<Composition, long long> totals;
            for (const auto& [cols, counts] : family_counts) {
                for (const auto& [a, n] : counts) totals[a] += n;
            }
            long long rhs = 0;
            for (const auto& [a, n] : totals) {
                if (n) rhs += (long long)atomic_kohnert_diagrams(a).size() * n;
            }
            long long lhs = (long long)kohnert_diagrams(b).size() *
                            (long long)generate_ssrt(l).size();
            if (lhs != rhs) {
                f.record("counting identity fails at " + to_string(b) + " x " + to_string(l));
                return;
            }
            f.checked += 1;
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + " x " + to_string(l) + ": " + e.what());
        }
    });
    return finish("bijection counting", f, t0);
}

CheckResult check_rsk_equivalence(int max_cells, int max_length) {
    auto t0 = clock_type::now();
    Failures f;
    std::vector<Composition> alphas;
    for (int len = 1; len <= max_length; ++len) {
        for (const Composition& a : compositions_up_to(len, max_cells)) {
            int n = total(a);
            if (n >= 1 && n <= max_cells) alphas.push_back(a);
        }
    }
    parallel_for(int(alphas.size()), 1, [&](int i) {
        const Composition& a = alphas[std::size_t(i)];
        int k = int(a.size());
        try {
            for (const Diagram& t : kohnert_diagrams(a)) {
                ReverseTableau p = lift_to_tableau(t, a);
                for (int r = 1; r <= k; ++r) {
                    InsertResult res = insert_row(t, a, k, r);
                    auto [q, cell] = rsk_insert(p, r);
                    if (!(lift_columns(res.diagram, k) == q)) {
                        f.record("lift/insert mismatch at " + to_string(a) + " r=" + std::to_string(r));
                        return;
                    }
                    f.checked += 1;
                }
            }
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(a) + ": " + e.what());
        }
    });
    return finish("rsk equivalence", f, t0);
}

CheckResult check_invertibility(const GridSpec& g, int max_k) {
    auto t0 = clock_type::now();
    Failures f;
    auto betas = grid_betas(g);
    parallel_for(int(betas.size()), g.jobs, [&](int i) {
        const Composition& b = betas[std::size_t(i)];
        try {
            for (const Diagram& t : kohnert_diagrams(b)) {
                for (int k = 1; k <= max_k; ++k) {
                    for (int r = 1; r <= k; ++r) {
                        InsertResult res = insert_row(t, b, k, r);
                        ExciseResult ex = excise(res.diagram, b, k);
                        if (!(ex.diagram == t) || ex.row != r) {
                            f.record("round trip fails at " + to_string(b) + " k=" +
                                     std::to_string(k) + " r=" + std::to_string(r));
                            return;
                        }
                        f.checked += 1;
                    }
                }
            }
        } catch (const std::exception& e) {
            f.record(std::string("exception at ") + to_string(b) + ": " + e.what());
        }
    });
    return finish("insertion invertibility", f, t0);
}

}  // namespace kohnert::verify
