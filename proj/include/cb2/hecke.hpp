#pragma once

// Constructible characters of the Weyl groups of types B and D for the
// parameter choice (q^r, q, ..., q), through the combinatorial classification:
// r-admissible involutions of the symmetric-difference set Z, the bijection
// with standard symbols, and the family partition by symbol content.

#include "cb2/canonical.hpp"
#include "cb2/partition.hpp"
#include "cb2/symbol.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace cb2 {

struct ZData {
    std::vector<int> z;      // sorted symmetric difference of the two rows
    std::vector<int> common; // sorted window entries of beta & gamma
    int floor = 0;
    int k = 0;
    int r = 0;

    int m_size() const { return static_cast<int>(z.size()); }
    auto operator<=>(const ZData&) const = default;
};

ZData z_data(const Symbol& s);

struct AdmissibleInvolution {
    std::vector<std::pair<int, int>> orbits; // (small, large), sorted by small
    std::vector<int> fixed;                  // sorted, exactly r of them

    auto operator<=>(const AdmissibleInvolution&) const = default;
};

// All r-admissible involutions of z, generated by the peeling recursion
// (remove a consecutive pair, recurse) with memoization and deduplication.
// Throws parity_violation when |z| - r is odd or negative.
std::vector<AdmissibleInvolution> admissible_involutions(const std::vector<int>& z, int r);
std::vector<AdmissibleInvolution> admissible_involutions(const ZData& zd);

// Peelability test for an arbitrary involution with r fixed points.
bool is_admissible(const std::vector<int>& z, const AdmissibleInvolution& inv);

// The involution whose nontrivial orbits are the pairs of the standard symbol.
AdmissibleInvolution involution_from_symbol(const Symbol& s);

// Inverse construction: smaller orbit members and fixed points go to the top
// row, larger members to the bottom row. Throws inadmissible_involution.
Symbol symbol_from_involution(const ZData& zd, const AdmissibleInvolution& inv);

struct Rational {
    long long num = 0;
    long long den = 1;
    auto operator<=>(const Rational&) const = default;
};

// A constructible character of type B: multiplicity-one sum over the symbols
// with the admissible placements of the orbits.
struct ConstructibleB {
    std::map<Bipartition, Rational> terms;
    bool operator==(const ConstructibleB&) const = default;
};

ConstructibleB constructible_B(const Symbol& s);

// Type D labels: unordered bipartitions, with a two-fold tag when the two
// components coincide. The tags are opaque; nothing depends on which is which.
enum class DTag { none, first, second };

struct DLabel {
    Partition small; // lexicographically smaller component
    Partition large;
    DTag tag = DTag::none;

    auto operator<=>(const DLabel&) const = default;
};

DLabel d_label(const Bipartition& bp);

struct ConstructibleD {
    std::map<DLabel, Rational> terms;
    bool operator==(const ConstructibleD&) const = default;
};

// All constructible characters of type D_m (r = 0): one combination per
// standard symbol that differs from its row swap, and two tagged singletons
// per row-symmetric standard symbol.
std::vector<ConstructibleD> constructible_D(int m, int k = 0);

struct FamilyBlock {
    ContentMultiset content;
    std::vector<Bipartition> labels;
};

// Partition of the bipartitions of m into families: blocks of equal symbol
// content (equivalently, equal weight).
std::vector<FamilyBlock> families(int m, int k, int r);

} // namespace cb2
