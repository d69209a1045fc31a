#include "cb2/canonical.hpp"

#include "cb2/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cb2 {

PairSet psi_pairs(const Symbol& s) {
    if (!is_standard(s)) throw not_standard("psi_pairs: symbol is not standard");

    std::set<int> beta_window(s.beta().begin(), s.beta().end());
    std::set<int> gamma_window(s.gamma().begin(), s.gamma().end());

    PairSet out;
    std::set<int> available; // beta entries not yet used as psi targets
    std::set<int> unmatched; // gamma entries not yet assigned
    for (int e : s.gamma()) {
        if (beta_window.contains(e))
            out.fixed.push_back(e); // gamma^0: psi is the identity there
        else
            unmatched.insert(e);
    }
    for (int e : s.beta())
        if (!gamma_window.contains(e)) available.insert(e);

    // Levels l = 1, 2, ...: match all j with j - l still available, then
    // retire both sides. Entries below the window are all common, so they
    // never enter either set.
    const int level_bound = unmatched.empty()
        ? 0
        : *unmatched.rbegin() - (available.empty() ? s.floor() : *available.begin()) + 1;
    for (int l = 1; !unmatched.empty(); ++l) {
        if (l > level_bound)
            throw std::logic_error("psi_pairs: matching did not terminate");
        std::vector<int> matched;
        for (int j : unmatched)
            if (available.contains(j - l)) matched.push_back(j);
        for (int j : matched) {
            out.pairs.emplace_back(j, j - l);
            unmatched.erase(j);
            available.erase(j - l);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

Symbol swap_pair(const Symbol& s, const std::pair<int, int>& pair) {
    const auto [j, psi] = pair;
    std::vector<int> beta = s.beta();
    std::vector<int> gamma = s.gamma();
    auto bit = std::find(beta.begin(), beta.end(), psi);
    auto git = std::find(gamma.begin(), gamma.end(), j);
    if (bit == beta.end() || git == gamma.end()) {
        // Already swapped: the larger element sits in beta.
        bit = std::find(beta.begin(), beta.end(), j);
        git = std::find(gamma.begin(), gamma.end(), psi);
        if (bit == beta.end() || git == gamma.end())
            throw std::invalid_argument("swap_pair: pair members not split across the rows");
        *bit = psi;
        *git = j;
    } else {
        *bit = j;
        *git = psi;
    }
    std::sort(beta.begin(), beta.end());
    std::sort(gamma.begin(), gamma.end());
    return Symbol{std::move(beta), std::move(gamma), s.floor(), s.k(), s.r()};
}

std::vector<std::pair<Symbol, int>> c_set(const Symbol& s) {
    const PairSet ps = psi_pairs(s); // throws not_standard
    const int p = ps.count();
    if (p > 24) throw std::invalid_argument("c_set: 2^p orbit too large to enumerate");
    std::vector<std::pair<Symbol, int>> out;
    out.reserve(std::size_t{1} << p);
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        Symbol sigma = s;
        for (int t = 0; t < p; ++t)
            if (mask & (1u << t)) sigma = swap_pair(sigma, ps.pairs[static_cast<std::size_t>(t)]);
        out.emplace_back(std::move(sigma), __builtin_popcount(mask));
    }
    return out;
}

void FockVector::add_term(const Bipartition& bp, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(bp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly FockVector::coefficient(const Bipartition& bp) const {
    auto it = terms_.find(bp);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

FockVector& FockVector::operator+=(const FockVector& other) {
    for (const auto& [bp, c] : other.terms_) add_term(bp, c);
    return *this;
}

FockVector FockVector::scaled(const LaurentPoly& factor) const {
    FockVector out;
    if (factor.is_zero()) return out;
    for (const auto& [bp, c] : terms_) out.terms_.emplace(bp, c * factor);
    return out;
}

FockVector FockVector::divided_exact(const LaurentPoly& divisor) const {
    FockVector out;
    for (const auto& [bp, c] : terms_) out.terms_.emplace(bp, div_exact(c, divisor));
    return out;
}

FockVector canonical_vector(const Symbol& s) {
    FockVector out;
    for (const auto& [sigma, n] : c_set(s)) {
        const Bipartition label = bipartition_from_symbol(sigma);
        if (!out.coefficient(label).is_zero())
            throw std::logic_error("canonical_vector: C(S) produced a repeated symbol");
        out.add_term(label, LaurentPoly::v(n));
    }
    return out;
}

FockVector canonical_vector(const Bipartition& bp) {
    return canonical_vector(symbol_from_bipartition(bp));
}

BasisMatrix basis_matrix(int m, int k, int r) {
    BasisMatrix out;
    out.rows = enumerate_bipartitions(m, k, r);
    std::map<Bipartition, std::size_t> row_index;
    for (std::size_t i = 0; i < out.rows.size(); ++i) row_index.emplace(out.rows[i], i);
    for (const auto& bp : out.rows)
        if (is_standard(bp)) out.cols.push_back(bp);

    out.entries.assign(out.rows.size(), std::vector<LaurentPoly>(out.cols.size()));
    for (std::size_t j = 0; j < out.cols.size(); ++j) {
        const FockVector column = canonical_vector(out.cols[j]);
        for (const auto& [bp, coeff] : column.terms()) {
            auto it = row_index.find(bp);
            if (it == row_index.end())
                throw std::logic_error("basis_matrix: canonical vector left the degree slice");
            out.entries[it->second][j] = coeff;
        }
    }
    return out;
}

BasisMatrix restrict_to_weight(const BasisMatrix& matrix, const WeightVector& weight) {
    BasisMatrix out;
    std::vector<std::size_t> row_keep, col_keep;
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        if (sl_weight(matrix.rows[i]) == weight) {
            row_keep.push_back(i);
            out.rows.push_back(matrix.rows[i]);
        }
    for (std::size_t j = 0; j < matrix.cols.size(); ++j)
        if (sl_weight(matrix.cols[j]) == weight) {
            col_keep.push_back(j);
            out.cols.push_back(matrix.cols[j]);
        }
    for (std::size_t i : row_keep) {
        std::vector<LaurentPoly> row;
        row.reserve(col_keep.size());
        for (std::size_t j : col_keep) row.push_back(matrix.entries[i][j]);
        out.entries.push_back(std::move(row));
    }
    return out;
}

} // namespace cb2
