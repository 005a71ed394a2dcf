#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kohnert/types.hpp"

namespace kohnert::verify {

// Grid of test inputs: beta over compositions with bounded parts/length,
// lambda over partitions with at most `cells` cells (any shorter length).
struct GridSpec {
    int parts = 2;
    int length = 4;
    int cells = 4;
    int jobs = 1;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    long long checked = 0;
    std::string detail;  // first failure, empty when passing
    double seconds = 0.0;
};

// KD(beta) as a disjoint union of atomic families, and the atom/pinned
// decompositions of the generating polynomials.
CheckResult check_decomposition(const GridSpec& g);
// kappa_beta * s_lambda against each expansion.
CheckResult check_atom_expansion(const GridSpec& g);
CheckResult check_schubert_expansion(const GridSpec& g);
CheckResult check_signed_expansion(const GridSpec& g);
// intersections of same-column k-additions as diagram sets.
CheckResult check_intersections(int max_total_cells);
// counting form of the bijection plus well-definedness of the Schubert
// coefficients.
CheckResult check_counting(const GridSpec& g);
// lift-and-insert equals tableau row insertion.
CheckResult check_rsk_equivalence(int max_cells, int max_length);
// excise undoes insert.
CheckResult check_invertibility(const GridSpec& g, int max_k);

std::vector<Composition> grid_betas(const GridSpec& g);
std::vector<Composition> grid_lambdas(const GridSpec& g);

// Deterministic parallel map over indices 0..n-1.
void parallel_for(int n, int jobs, const std::function<void(int)>& body);

}  // namespace kohnert::verify
