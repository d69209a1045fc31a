#include "cb2/cyclotomic.hpp"

#include "cb2/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cb2 {

CyclotomicParams::CyclotomicParams(int d_value, int m_value, std::vector<int> charge_list)
    : d(d_value), m(m_value), charges(std::move(charge_list)) {
    if (d < 1) throw std::invalid_argument("cyclotomic parameters need d >= 1");
    if (m < 0) throw std::invalid_argument("cyclotomic parameters need m >= 0");
    if (static_cast<int>(charges.size()) != d)
        throw std::invalid_argument("cyclotomic parameters need one charge per component");
}

std::vector<DPartition> enumerate_dpartitions(const CyclotomicParams& params) {
    return enumerate_dpartitions(params.m, params.charges);
}

std::vector<RouquierBlock> rouquier_families(const CyclotomicParams& params) {
    std::map<ContentMultiset, std::vector<DPartition>> blocks;
    for (const auto& dp : enumerate_dpartitions(params)) blocks[cell_content(dp)].push_back(dp);

    std::vector<RouquierBlock> out;
    for (auto& [content, labels] : blocks) out.push_back(RouquierBlock{content, std::move(labels)});
    std::sort(out.begin(), out.end(), [](const RouquierBlock& a, const RouquierBlock& b) {
        return a.labels.front() < b.labels.front();
    });
    return out;
}

void constructible_analogues(const CyclotomicParams&) {
    throw not_implemented(
        "constructible-like combinations for d > 2 are an open question; not implemented");
}

} // namespace cb2
