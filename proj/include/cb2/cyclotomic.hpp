#pragma once

// Rouquier family partitions for the cyclotomic algebras attached to d-tuples
// of charged partitions: blocks of equal cell content, equivalently of equal
// weight. The root of unity in the defining relations never needs a numeric
// realization; everything here is label combinatorics.

#include "cb2/partition.hpp"

#include <vector>

namespace cb2 {

struct CyclotomicParams {
    int d = 1;
    int m = 0;
    std::vector<int> charges; // r_0 .. r_{d-1}

    CyclotomicParams(int d_value, int m_value, std::vector<int> charge_list);
};

std::vector<DPartition> enumerate_dpartitions(const CyclotomicParams& params);

struct RouquierBlock {
    ContentMultiset content;
    std::vector<DPartition> labels;
};

std::vector<RouquierBlock> rouquier_families(const CyclotomicParams& params);

// Higher-level analogues of constructible characters are an open question;
// this surface only reports that. Throws not_implemented.
[[noreturn]] void constructible_analogues(const CyclotomicParams& params);

} // namespace cb2
