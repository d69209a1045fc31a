#include "cb2/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cb2 {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition part is negative");
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    size_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

int Partition::part_at(int charge, int i) const {
    if (i > charge) throw std::out_of_range("part index above charge");
    const int t = i - (charge - length()) - 1; // 0-based position in parts_
    return t < 0 ? 0 : parts_[static_cast<std::size_t>(t)];
}

Bipartition::Bipartition(Partition top_part, Partition bottom_part, int charge_k, int level_r)
    : top(std::move(top_part)), bottom(std::move(bottom_part)), k(charge_k), r(level_r) {
    if (r < 0) throw std::invalid_argument("bipartition level r must be nonnegative");
}

DPartition::DPartition(std::vector<Partition> comps, std::vector<int> chgs)
    : components(std::move(comps)), charges(std::move(chgs)) {
    if (components.empty()) throw std::invalid_argument("d-partition needs d >= 1 components");
    if (components.size() != charges.size())
        throw std::invalid_argument("d-partition component/charge count mismatch");
}

int DPartition::degree() const {
    int sum = 0;
    for (const auto& c : components) sum += c.size();
    return sum;
}

void ContentMultiset::add(int value, int multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    counts_[value] += multiplicity;
}

void ContentMultiset::add_range(int first, int last) {
    for (int v = first; v <= last; ++v) add(v);
}

int ContentMultiset::total() const {
    int sum = 0;
    for (const auto& [v, c] : counts_) sum += c;
    return sum;
}

ContentMultiset cell_content(const Partition& p, int charge) {
    ContentMultiset out;
    const int len = p.length();
    for (int t = 0; t < len; ++t) {
        const int i = charge - len + 1 + t;
        out.add_range(i, i + p.parts()[static_cast<std::size_t>(t)] - 1);
    }
    return out;
}

namespace {

ContentMultiset merged(const ContentMultiset& a, const ContentMultiset& b) {
    ContentMultiset out = a;
    for (const auto& [v, c] : b.counts()) out.add(v, c);
    return out;
}

} // namespace

ContentMultiset cell_content(const Bipartition& bp) {
    return merged(cell_content(bp.top, bp.k + bp.r), cell_content(bp.bottom, bp.k));
}

ContentMultiset cell_content(const DPartition& dp) {
    ContentMultiset out;
    for (int s = 0; s < dp.d(); ++s)
        out = merged(out, cell_content(dp.components[static_cast<std::size_t>(s)],
                                       dp.charges[static_cast<std::size_t>(s)]));
    return out;
}

namespace {

WeightVector weight_from(std::vector<int> charges, const ContentMultiset& content) {
    std::sort(charges.begin(), charges.end());
    return WeightVector{std::move(charges), content.counts()};
}

} // namespace

WeightVector sl_weight(const Bipartition& bp) {
    return weight_from({bp.k, bp.k + bp.r}, cell_content(bp));
}

WeightVector weight_of_dpartition(const DPartition& dp) {
    return weight_from(dp.charges, cell_content(dp));
}

namespace {

void gen_partitions(int n, int min_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{stack});
        return;
    }
    for (int p = min_part; p <= n; ++p) {
        stack.push_back(p);
        gen_partitions(n - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, 1, stack, out);
    return out;
}

std::vector<std::pair<Partition, Partition>> enumerate_bipartition_shapes(int m) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = 0; a <= m; ++a) {
        for (const auto& lambda : partitions_of(a))
            for (const auto& mu : partitions_of(m - a)) out.emplace_back(lambda, mu);
    }
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(int m, int k, int r) {
    std::vector<Bipartition> out;
    for (auto& [lambda, mu] : enumerate_bipartition_shapes(m)) out.emplace_back(lambda, mu, k, r);
    return out;
}

namespace {

void gen_dpartitions(int m, int comp, const std::vector<int>& charges,
                     std::vector<Partition>& stack, std::vector<DPartition>& out) {
    const int d = static_cast<int>(charges.size());
    if (comp == d - 1) {
        for (const auto& p : partitions_of(m)) {
            stack.push_back(p);
            out.emplace_back(stack, charges);
            stack.pop_back();
        }
        return;
    }
    for (int a = 0; a <= m; ++a) {
        for (const auto& p : partitions_of(a)) {
            stack.push_back(p);
            gen_dpartitions(m - a, comp + 1, charges, stack, out);
            stack.pop_back();
        }
    }
}

} // namespace

std::vector<DPartition> enumerate_dpartitions(int m, const std::vector<int>& charges) {
    if (charges.empty()) throw std::invalid_argument("enumerate_dpartitions: d >= 1 required");
    std::vector<DPartition> out;
    std::vector<Partition> stack;
    gen_dpartitions(m, 0, charges, stack, out);
    return out;
}

} // namespace cb2
