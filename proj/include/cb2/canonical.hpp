#pragma once

// The pairing injection psi of a standard symbol, its orbit set C(S) with the
// swap statistic n, and the closed formula for canonical basis vectors: the
// vector attached to a standard symbol S expands on the standard basis as
// sum over Sigma in C(S) of v^{n(Sigma)} u_Sigma.

#include "cb2/laurent.hpp"
#include "cb2/partition.hpp"
#include "cb2/symbol.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cb2 {

struct PairSet {
    // (j, psi(j)) with psi(j) < j, j from gamma, psi(j) from beta; sorted by j.
    std::vector<std::pair<int, int>> pairs;
    // Window entries of beta and gamma with psi(j) = j (the common entries).
    std::vector<int> fixed;

    int count() const { return static_cast<int>(pairs.size()); }
};

// The stratified greedy matching gamma^0 = gamma & beta, gamma^l = entries
// matched at distance l. Throws not_standard.
PairSet psi_pairs(const Symbol& s);

// Swap the two members of one pair across the rows and re-sort.
Symbol swap_pair(const Symbol& s, const std::pair<int, int>& pair);

// All 2^p symbols obtained by swapping a subset of pairs, with n = subset
// size. Subsets run in binary-counter order, bit t = t-th pair sorted by its
// larger element, so the entry (s, 0) comes first.
std::vector<std::pair<Symbol, int>> c_set(const Symbol& s);

// A finitely supported vector of the level-2 Fock space on the standard basis.
class FockVector {
public:
    FockVector() = default;

    void add_term(const Bipartition& bp, const LaurentPoly& coeff);
    const std::map<Bipartition, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    LaurentPoly coefficient(const Bipartition& bp) const;

    FockVector& operator+=(const FockVector& other);
    // Multiply every coefficient.
    FockVector scaled(const LaurentPoly& factor) const;
    // Exact division of every coefficient; throws inexact_division.
    FockVector divided_exact(const LaurentPoly& divisor) const;

    bool operator==(const FockVector&) const = default;

private:
    std::map<Bipartition, LaurentPoly> terms_;
};

FockVector canonical_vector(const Symbol& s);
FockVector canonical_vector(const Bipartition& bp);

struct BasisMatrix {
    std::vector<Bipartition> rows; // all bipartitions of degree m
    std::vector<Bipartition> cols; // the standard ones
    std::vector<std::vector<LaurentPoly>> entries; // entries[row][col]
};

BasisMatrix basis_matrix(int m, int k, int r);
// Keep only rows and columns whose labels have the given weight.
BasisMatrix restrict_to_weight(const BasisMatrix& matrix, const WeightVector& weight);

} // namespace cb2
