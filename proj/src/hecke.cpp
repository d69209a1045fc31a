#include "cb2/hecke.hpp"

#include "cb2/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cb2 {

ZData z_data(const Symbol& s) {
    ZData out;
    out.floor = s.floor();
    out.k = s.k();
    out.r = s.r();
    std::set<int> beta(s.beta().begin(), s.beta().end());
    std::set<int> gamma(s.gamma().begin(), s.gamma().end());
    std::set_intersection(beta.begin(), beta.end(), gamma.begin(), gamma.end(),
                          std::back_inserter(out.common));
    std::set_symmetric_difference(beta.begin(), beta.end(), gamma.begin(), gamma.end(),
                                  std::back_inserter(out.z));
    if ((out.m_size() - out.r) % 2 != 0)
        throw std::logic_error("z_data: |Z| - r is odd"); // impossible for a valid symbol
    return out;
}

namespace {

AdmissibleInvolution normalized(std::vector<std::pair<int, int>> orbits, std::vector<int> fixed) {
    for (auto& [a, b] : orbits)
        if (a > b) std::swap(a, b);
    std::sort(orbits.begin(), orbits.end());
    std::sort(fixed.begin(), fixed.end());
    return AdmissibleInvolution{std::move(orbits), std::move(fixed)};
}

using InvolutionList = std::vector<AdmissibleInvolution>;

// Peeling recursion over the current remaining set, memoized on it.
const InvolutionList& peel(const std::vector<int>& z, int r,
                           std::map<std::vector<int>, InvolutionList>& memo) {
    auto it = memo.find(z);
    if (it != memo.end()) return it->second;

    InvolutionList result;
    if (static_cast<int>(z.size()) == r) {
        result.push_back(AdmissibleInvolution{{}, z});
    } else {
        std::set<AdmissibleInvolution> seen;
        for (std::size_t i = 0; i + 1 < z.size(); ++i) {
            std::vector<int> rest = z;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i),
                       rest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            for (const auto& sub : peel(rest, r, memo)) {
                auto orbits = sub.orbits;
                orbits.emplace_back(z[i], z[i + 1]);
                seen.insert(normalized(std::move(orbits), sub.fixed));
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    return memo.emplace(z, std::move(result)).first->second;
}

} // namespace

std::vector<AdmissibleInvolution> admissible_involutions(const std::vector<int>& z, int r) {
    if (r < 0 || static_cast<int>(z.size()) < r || (static_cast<int>(z.size()) - r) % 2 != 0)
        throw parity_violation("admissible_involutions: |z| - r must be even and nonnegative");
    std::map<std::vector<int>, InvolutionList> memo;
    return peel(z, r, memo);
}

std::vector<AdmissibleInvolution> admissible_involutions(const ZData& zd) {
    return admissible_involutions(zd.z, zd.r);
}

namespace {

bool peel_test(std::vector<int> z, const std::map<int, int>& partner,
               std::map<std::vector<int>, bool>& memo) {
    auto it = memo.find(z);
    if (it != memo.end()) return it->second;
    bool ok = false;
    if (std::all_of(z.begin(), z.end(), [&](int v) { return !partner.contains(v); })) {
        ok = true; // only fixed points remain
    } else {
        for (std::size_t i = 0; i + 1 < z.size() && !ok; ++i) {
            auto p = partner.find(z[i]);
            if (p == partner.end() || p->second != z[i + 1]) continue;
            std::vector<int> rest = z;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i),
                       rest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            ok = peel_test(std::move(rest), partner, memo);
        }
    }
    memo.emplace(std::move(z), ok);
    return ok;
}

} // namespace

bool is_admissible(const std::vector<int>& z, const AdmissibleInvolution& inv) {
    std::set<int> covered(inv.fixed.begin(), inv.fixed.end());
    std::map<int, int> partner;
    for (const auto& [a, b] : inv.orbits) {
        partner[a] = b;
        partner[b] = a;
        covered.insert(a);
        covered.insert(b);
    }
    if (covered.size() != z.size() || inv.fixed.size() + 2 * inv.orbits.size() != z.size())
        return false;
    for (int v : z)
        if (!covered.contains(v)) return false;
    std::map<std::vector<int>, bool> memo;
    return peel_test(z, partner, memo);
}

AdmissibleInvolution involution_from_symbol(const Symbol& s) {
    const PairSet ps = psi_pairs(s); // throws not_standard
    const ZData zd = z_data(s);
    std::set<int> in_orbit;
    std::vector<std::pair<int, int>> orbits;
    for (const auto& [j, psi] : ps.pairs) {
        orbits.emplace_back(psi, j);
        in_orbit.insert(psi);
        in_orbit.insert(j);
    }
    std::vector<int> fixed;
    for (int v : zd.z)
        if (!in_orbit.contains(v)) fixed.push_back(v);
    return normalized(std::move(orbits), std::move(fixed));
}

Symbol symbol_from_involution(const ZData& zd, const AdmissibleInvolution& inv) {
    if (static_cast<int>(inv.fixed.size()) != zd.r || !is_admissible(zd.z, inv))
        throw inadmissible_involution("symbol_from_involution: involution is not r-admissible");
    std::vector<int> beta = zd.common;
    std::vector<int> gamma = zd.common;
    beta.insert(beta.end(), inv.fixed.begin(), inv.fixed.end());
    for (const auto& [small, large] : inv.orbits) {
        beta.push_back(small);
        gamma.push_back(large);
    }
    std::sort(beta.begin(), beta.end());
    std::sort(gamma.begin(), gamma.end());
    return Symbol{std::move(beta), std::move(gamma), zd.floor, zd.k, zd.r};
}

ConstructibleB constructible_B(const Symbol& s) {
    const ZData zd = z_data(s);
    const AdmissibleInvolution inv = involution_from_symbol(s); // throws not_standard
    const int p = static_cast<int>(inv.orbits.size());
    if (p > 24) throw std::invalid_argument("constructible_B: 2^p support too large");

    // Enumerate the placements directly from the involution: one element of
    // each orbit to the top row, the other to the bottom row.
    ConstructibleB out;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        std::vector<int> beta = zd.common;
        std::vector<int> gamma = zd.common;
        beta.insert(beta.end(), inv.fixed.begin(), inv.fixed.end());
        for (int t = 0; t < p; ++t) {
            const auto& [small, large] = inv.orbits[static_cast<std::size_t>(t)];
            const bool swapped = mask & (1u << t);
            beta.push_back(swapped ? large : small);
            gamma.push_back(swapped ? small : large);
        }
        std::sort(beta.begin(), beta.end());
        std::sort(gamma.begin(), gamma.end());
        const Symbol sigma{std::move(beta), std::move(gamma), zd.floor, zd.k, zd.r};
        out.terms[bipartition_from_symbol(sigma)].num += 1;
    }
    for (const auto& [label, coeff] : out.terms)
        if (coeff != Rational{1, 1})
            throw std::logic_error("constructible_B: repeated placement symbol");
    return out;
}

DLabel d_label(const Bipartition& bp) {
    if (bp.r != 0) throw std::invalid_argument("d_label: type D requires r = 0");
    DLabel out;
    out.small = std::min(bp.top, bp.bottom);
    out.large = std::max(bp.top, bp.bottom);
    return out;
}

std::vector<ConstructibleD> constructible_D(int m, int k) {
    std::vector<ConstructibleD> out;
    for (const auto& s : enumerate_standard(m, k, 0)) {
        const Bipartition bp = bipartition_from_symbol(s);
        if (bp.top == bp.bottom) { // row-symmetric: two tagged singletons
            for (DTag tag : {DTag::first, DTag::second}) {
                DLabel label = d_label(bp);
                label.tag = tag;
                ConstructibleD comb;
                comb.terms[label] = Rational{1, 1};
                out.push_back(std::move(comb));
            }
            continue;
        }
        // Half-sum over C(S); the row swap pairs the symbols two by two, so
        // every unordered label ends with coefficient one.
        ConstructibleD comb;
        for (const auto& [sigma, n] : c_set(s)) {
            Rational& c = comb.terms[d_label(bipartition_from_symbol(sigma))];
            c.den = 2;
            c.num += 1;
        }
        for (const auto& [label, coeff] : comb.terms)
            if (coeff != Rational{2, 2})
                throw std::logic_error("constructible_D: C(S) not paired under the row swap");
        for (auto& [label, coeff] : comb.terms) coeff = Rational{1, 1};
        out.push_back(std::move(comb));
    }
    return out;
}

std::vector<FamilyBlock> families(int m, int k, int r) {
    const int window = m + r + 2;
    std::map<ContentMultiset, std::vector<Bipartition>> blocks;
    for (const auto& bp : enumerate_bipartitions(m, k, r))
        blocks[symbol_content(symbol_from_bipartition(bp, window))].push_back(bp);

    std::vector<FamilyBlock> out;
    for (auto& [content, labels] : blocks) out.push_back(FamilyBlock{content, std::move(labels)});
    // Deterministic order: by minimal label; labels inside a block are already
    // in enumeration order.
    std::sort(out.begin(), out.end(), [](const FamilyBlock& a, const FamilyBlock& b) {
        return a.labels.front() < b.labels.front();
    });
    return out;
}

} // namespace cb2
