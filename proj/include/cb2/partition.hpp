#pragma once

// Partitions, charged bipartitions and d-partitions, and their charged cell
// contents. Partitions are stored in weakly increasing order with zero parts
// stripped. A partition "at charge c" occupies the semi-infinite index range
// i <= c, its nonzero parts sitting at the top indices c-len+1..c; the part at
// any lower index is zero.

#include <compare>
#include <map>
#include <vector>

namespace cb2 {

class Partition {
public:
    Partition() = default;
    // Accepts parts in any order, ignores zeros, rejects negatives.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    // Number of cells.
    int size() const { return size_; }
    // Part at semi-infinite index i for this partition placed at `charge`;
    // zero below the nonzero range, throws std::out_of_range for i > charge.
    int part_at(int charge, int i) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_; // weakly increasing, no zeros
    int size_ = 0;
};

struct Bipartition {
    Partition top;    // component at charge k + r
    Partition bottom; // component at charge k
    int k = 0;
    int r = 0;

    Bipartition() = default;
    Bipartition(Partition top_part, Partition bottom_part, int charge_k, int level_r);

    int degree() const { return top.size() + bottom.size(); }
    int top_part_at(int i) const { return top.part_at(k + r, i); }
    int bottom_part_at(int i) const { return bottom.part_at(k, i); }
    // Same shape at charge k + delta (the shift bijection T^delta).
    Bipartition shifted(int delta) const { return {top, bottom, k + delta, r}; }

    // Order: (k, r, |top|, top, bottom); within one (k, r, degree) slice this
    // is the enumeration order lexicographic on (|top|, top, bottom).
    auto operator<=>(const Bipartition& o) const {
        if (auto c = k <=> o.k; c != 0) return c;
        if (auto c = r <=> o.r; c != 0) return c;
        if (auto c = top.size() <=> o.top.size(); c != 0) return c;
        if (auto c = top <=> o.top; c != 0) return c;
        return bottom <=> o.bottom;
    }
    bool operator==(const Bipartition&) const = default;
};

struct DPartition {
    std::vector<Partition> components;
    std::vector<int> charges;

    DPartition() = default;
    DPartition(std::vector<Partition> comps, std::vector<int> chgs);

    int d() const { return static_cast<int>(components.size()); }
    int degree() const;

    auto operator<=>(const DPartition&) const = default;
};

// Multiset of integers with positive multiplicities.
class ContentMultiset {
public:
    void add(int value, int multiplicity = 1);
    void add_range(int first, int last); // first..last inclusive, empty if last < first
    const std::map<int, int>& counts() const { return counts_; }
    bool empty() const { return counts_.empty(); }
    int total() const;

    auto operator<=>(const ContentMultiset&) const = default;

private:
    std::map<int, int> counts_;
};

// An sl_infinity weight Lambda - sum_j c_j alpha_j, recorded as the multiset
// of fundamental-weight indices of Lambda plus the simple-root coefficients.
struct WeightVector {
    std::vector<int> highest_weight;      // sorted charges
    std::map<int, int> alpha_coefficients; // j -> c_j, positive entries only

    auto operator<=>(const WeightVector&) const = default;
};

// Charged cell content: the part at semi-infinite index i contributes the
// integers i, i+1, ..., i+part-1 (one per cell of its row).
ContentMultiset cell_content(const Partition& p, int charge);
ContentMultiset cell_content(const Bipartition& bp);
ContentMultiset cell_content(const DPartition& dp);

WeightVector sl_weight(const Bipartition& bp);
WeightVector weight_of_dpartition(const DPartition& dp);

// All partitions of n in lexicographic order of their increasing parts lists.
std::vector<Partition> partitions_of(int n);

// All ordered pairs (lambda, mu) with |lambda| + |mu| = m, lexicographic on
// (|lambda|, lambda, mu).
std::vector<std::pair<Partition, Partition>> enumerate_bipartition_shapes(int m);
std::vector<Bipartition> enumerate_bipartitions(int m, int k, int r);

// All d-partitions of m for the given charges, lexicographic on
// (|c0|, c0, |c1|, c1, ...).
std::vector<DPartition> enumerate_dpartitions(int m, const std::vector<int>& charges);

} // namespace cb2
