#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "kohnert/insertion.hpp"
#include "kohnert/tableaux.hpp"
#include "kohnert/types.hpp"

namespace kohnert {

using Int = boost::multiprecision::cpp_int;

// Sparse multivariate polynomial with exact integer coefficients, keyed by
// exponent vectors of a fixed length.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    static Polynomial constant(int nvars, Int c);
    static Polynomial monomial(const Composition& exponents, Int c = 1);

    int nvars() const { return nvars_; }
    const std::map<Composition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Composition& e, Int c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(Int c);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int nvars_ = 0;
    std::map<Composition, Int> terms_;
};

// Generating polynomials of the diagram families. m is the variable count
// (at least the composition length; weights are padded with zeros).
Polynomial demazure_char(const Composition& alpha, int m, int budget = -1);
Polynomial schur(const Composition& lambda, int m = -1);
Polynomial atom_poly(const Composition& alpha, int m, int budget = -1);
Polynomial pinned_poly(const Composition& alpha, int m, int budget = -1);

// Lower order ideal in the left-swap order, stored by generators.
struct OrderIdeal {
    std::vector<Composition> generators;

    std::vector<Composition> members() const;  // downward closure, sorted
    bool contains(const Composition& a) const;
};

Polynomial schubert_char(const OrderIdeal& ideal, int m, int budget = -1);

// kappa_beta = sum of atoms over the down-set of beta.
std::vector<Composition> key_to_atom(const Composition& beta);
// kappa_gamma = sum of pinned polynomials over down-set elements that are
// maximal within it for the pinned order; pinned = sum of atoms over the
// pinned down-set.
struct PinnedDecompositions {
    std::vector<Composition> key_to_pinned;
    std::vector<Composition> pinned_to_atom;
};
PinnedDecompositions pinned_decompositions(const Composition& gamma);

// Demazure-atom expansion of kappa_beta * s_lambda via restricted insertion:
// coefficient of the atom at gamma = (number of pairs inserting into
// AKD(gamma)) / |AKD(gamma)|.
std::map<Composition, long long> atom_expansion(const Composition& beta, const Composition& lambda,
                                                int k = -1, int budget = -1);

// |LAT(alpha/beta, lambda)| computed from saturated chains; asserts the
// count is independent of the witnessing chain.
long long lat_coefficient(const Composition& alpha, const Composition& beta,
                          const Composition& lambda, int k);

// Composition gamma* with KD(gamma*) equal to the intersection of the
// KD(gamma_i); the unique maximal common lower bound in the left-swap order.
Composition kd_intersection(const std::vector<Composition>& gammas);
// Single-column intersection formula for k-additions of rows r_1 < ... < r_m.
Composition kd_intersection_single_column(const Composition& beta, int column,
                                          const std::vector<int>& rows, int k);

// All compositions below a gamma reachable by k-adding the given columns in
// order, as a lower order ideal.
OrderIdeal gamma_ideal(const Composition& beta, int k, const std::vector<int>& columns);

struct SchubertTerm {
    std::vector<int> columns;
    OrderIdeal ideal;
    long long coefficient = 0;
};
std::vector<SchubertTerm> schubert_expansion(const Composition& beta, const Composition& lambda,
                                             int k = -1);

// Signed Demazure-character expansion by inclusion-exclusion over chain
// groups sharing the same ordered column sequence. grouped = false exposes
// the ungrouped reading for experiments.
std::map<Composition, long long> signed_key_expansion(const Composition& beta, const Composition& lambda,
                                                      int k = -1, bool grouped = true);

bool is_k_positive(const Composition& beta, int k);

// Test oracle: expand a homogeneous polynomial in the atom basis by exact
// linear solve over all candidate indices of the right degree and length.
std::map<Composition, Int> atom_basis_solve(const Polynomial& p, int degree, int m, int budget = -1);

}  // namespace kohnert
