#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kohnert/core.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/types.hpp"

namespace kohnert {

// All semistandard reverse tableaux of the given partition shape with
// entries in 1..length(lambda).
std::vector<ReverseTableau> generate_ssrt(const Composition& lambda);

// Schensted row insertion for reverse tableaux: enter at the top row,
// replace the leftmost entry strictly smaller, bump downward, append when
// nothing is smaller. Returns the tableau and the new cell.
std::pair<ReverseTableau, Cell> rsk_insert(const ReverseTableau& p, int r);

// Exact inverse: remove the given outer cell and unbump upward, returning
// the tableau and the expelled value.
std::pair<ReverseTableau, int> rsk_reverse(const ReverseTableau& p, Cell c);

struct TwoLineArray {
    std::vector<std::pair<int, int>> pairs;  // (top q, bottom r)

    friend auto operator<=>(const TwoLineArray&, const TwoLineArray&) = default;
};

// The unique two-line array with top row (k^{lambda_k},...,1^{lambda_1})
// that RSK-maps to (r, superstandard recording tableau).
TwoLineArray tableau_to_biword(const ReverseTableau& r);

// Skew cells of shape alpha/beta for a chain of k-additions ending at gamma
// with alpha below gamma: the cell labeled r_i in column c_i of the proper
// labeling of D(alpha) by gamma, one per chain step.
std::vector<Cell> skew_cells(const Composition& alpha, const std::vector<KChainStep>& chain);

// Skew filling used for recording tableaux. ambient is alpha for the atomic
// variant and gamma itself for the key variant; entries live on the skew
// cells, remaining cells of D(ambient) are virtual (infinity in column 1,
// copy-left elsewhere, rows above k ignored).
struct SkewTableau {
    std::vector<KChainStep> chain;
    Composition base;     // beta
    Composition ambient;  // alpha (atomic) or gamma (key)
    int k = 0;
    bool key_variant = false;
    std::map<Cell, int> entries;

    Composition weight(int length) const;

    friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;
};

bool is_atomic(const SkewTableau& t);
bool is_key(const SkewTableau& t);
bool is_lattice(const SkewTableau& t);
// the "suffix weights form a partition" reading; equal to is_lattice
bool is_lattice_partition_reading(const SkewTableau& t);

// Mutually inverse weight-preserving bijections between lattice atomic
// tableaux of shape alpha/beta and lattice key tableaux of shape gamma/beta.
SkewTableau atomic_to_key(const SkewTableau& atomic);
SkewTableau key_to_atomic(const SkewTableau& key, const Composition& alpha);

// All lattice fillings of the skew shape with weight lambda.
std::vector<SkewTableau> enumerate_lat(const Composition& alpha, const Composition& beta,
                                       const std::vector<KChainStep>& chain, const Composition& lambda,
                                       int k);
std::vector<SkewTableau> enumerate_lkt(const Composition& beta, const std::vector<KChainStep>& chain,
                                       const Composition& lambda, int k);

// Recording tableau of an iterated insertion: entry q_i on the skew cell of
// the i-th chain step, ambient = thread weight of the final diagram.
SkewTableau record(const IteratedInsertResult& run, const Composition& beta, int k,
                   const TwoLineArray& biword);

// All saturated k-addition chains of the given length from beta.
struct ChainData {
    std::vector<KChainStep> steps;
    Composition gamma;
    std::vector<int> columns;
};
std::vector<ChainData> k_addition_chains(const Composition& beta, int k, int length);

}  // namespace kohnert
