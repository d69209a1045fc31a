#include "cb2/quantum_action.hpp"

#include "cb2/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cb2 {

namespace {

bool contains(const std::vector<int>& row, int value) {
    return std::binary_search(row.begin(), row.end(), value);
}

std::vector<int> replaced(const std::vector<int>& row, int from, int to) {
    std::vector<int> out = row;
    *std::find(out.begin(), out.end(), from) = to;
    std::sort(out.begin(), out.end());
    return out;
}

int t_exponent(const std::vector<int>& row, int floor, int j) {
    const auto in = [&](int value) { return value <= floor || contains(row, value); };
    return (in(j) ? 1 : 0) - (in(j + 1) ? 1 : 0);
}

} // namespace

std::optional<std::pair<std::vector<int>, LaurentPoly>>
act_row(const Operator& op, const std::vector<int>& row, int floor) {
    if (op.kind == OpKind::f_divided_square)
        throw std::invalid_argument("act_row: divided power acts on the Fock space, not a row");
    const int j = op.index;
    if (j <= floor) throw window_violation("act_row: operator index at or below the window floor");

    switch (op.kind) {
    case OpKind::f:
        if (!contains(row, j) || contains(row, j + 1)) return std::nullopt;
        return std::pair{replaced(row, j, j + 1), LaurentPoly{1}};
    case OpKind::e:
        if (!contains(row, j + 1) || contains(row, j)) return std::nullopt;
        return std::pair{replaced(row, j + 1, j), LaurentPoly{1}};
    case OpKind::t:
        return std::pair{row, LaurentPoly::v(t_exponent(row, floor, j))};
    case OpKind::t_inverse:
        return std::pair{row, LaurentPoly::v(-t_exponent(row, floor, j))};
    default:
        throw std::invalid_argument("act_row: unknown operator kind");
    }
}

namespace {

// Window floor low enough for the term's own parts and for indices j, j+1.
Symbol materialize_for(const Bipartition& bp, int j) {
    const int part_floor = std::min(bp.k - bp.bottom.length(), bp.k + bp.r - bp.top.length());
    const int floor = std::min({part_floor, j - 1, bp.k - 1});
    return symbol_from_bipartition(bp, bp.k + bp.r - floor);
}

FockVector act_one_generator(const Operator& op, const FockVector& vec) {
    FockVector out;
    const int j = op.index;
    for (const auto& [bp, c] : vec.terms()) {
        const Symbol s = materialize_for(bp, j);
        const int floor = s.floor();
        auto term = [&](std::vector<int> beta, std::vector<int> gamma, const LaurentPoly& coeff) {
            Symbol image{std::move(beta), std::move(gamma), floor, s.k(), s.r()};
            out.add_term(bipartition_from_symbol(image), coeff);
        };
        switch (op.kind) {
        case OpKind::f: {
            // f(u_beta (x) u_gamma) = u_beta (x) f u_gamma + f u_beta (x) t u_gamma
            if (auto g = act_row({OpKind::f, j}, s.gamma(), floor))
                term(s.beta(), std::move(g->first), c);
            if (auto b = act_row({OpKind::f, j}, s.beta(), floor)) {
                const auto t = act_row({OpKind::t, j}, s.gamma(), floor);
                term(std::move(b->first), s.gamma(), c * t->second);
            }
            break;
        }
        case OpKind::e: {
            // e(u_beta (x) u_gamma) = e u_beta (x) u_gamma + t^-1 u_beta (x) e u_gamma
            if (auto b = act_row({OpKind::e, j}, s.beta(), floor))
                term(std::move(b->first), s.gamma(), c);
            if (auto g = act_row({OpKind::e, j}, s.gamma(), floor)) {
                const auto t = act_row({OpKind::t_inverse, j}, s.beta(), floor);
                term(s.beta(), std::move(g->first), c * t->second);
            }
            break;
        }
        case OpKind::t:
        case OpKind::t_inverse: {
            const auto tb = act_row({op.kind, j}, s.beta(), floor);
            const auto tg = act_row({op.kind, j}, s.gamma(), floor);
            out.add_term(bp, c * tb->second * tg->second);
            break;
        }
        default:
            throw std::logic_error("act_one_generator: unexpected operator kind");
        }
    }
    return out;
}

} // namespace

FockVector act_fock(const Operator& op, const FockVector& vec) {
    if (op.kind != OpKind::f_divided_square) return act_one_generator(op, vec);
    const Operator f{OpKind::f, op.index};
    return act_one_generator(f, act_one_generator(f, vec)).divided_exact(quantum_integer(2));
}

namespace {

struct Reduction {
    int j;        // the reducible entry
    int exponent; // 1 or 2: plain f or divided square at index j-1
};

// Smallest entry j of S with {j, j-1} meeting one row in {j} alone, classified
// into the three cases of the reduction.
std::optional<Reduction> find_reduction(const Symbol& s) {
    std::set<int> entries(s.beta().begin(), s.beta().end());
    entries.insert(s.gamma().begin(), s.gamma().end());
    for (int j : entries) {
        const bool in_beta = s.beta_contains(j);
        const bool in_gamma = s.gamma_contains(j);
        const bool below_beta = s.beta_contains(j - 1);
        const bool below_gamma = s.gamma_contains(j - 1);
        if (!((in_beta && !below_beta) || (in_gamma && !below_gamma))) continue;
        if (in_beta && in_gamma && !below_beta && !below_gamma) return Reduction{j, 2};
        return Reduction{j, 1};
    }
    return std::nullopt;
}

// Lower the reducible entry, returning the symbol one step closer to S_0.
Symbol apply_reduction(const Symbol& s, const Reduction& red) {
    const int j = red.j;
    std::vector<int> beta = s.beta();
    std::vector<int> gamma = s.gamma();
    const bool in_beta = s.beta_contains(j);
    const bool in_gamma = s.gamma_contains(j);
    auto lower_in = [&](std::vector<int>& row) {
        *std::find(row.begin(), row.end(), j) = j - 1;
        std::sort(row.begin(), row.end());
    };
    if (red.exponent == 2) { // case (a): j in both rows, j-1 in neither
        lower_in(beta);
        lower_in(gamma);
    } else if (in_beta && in_gamma) { // case (b): lower j in the row without j-1
        lower_in(s.beta_contains(j - 1) ? gamma : beta);
    } else { // case (c): single occurrence
        lower_in(in_beta ? beta : gamma);
    }
    return Symbol{std::move(beta), std::move(gamma), s.floor(), s.k(), s.r()};
}

} // namespace

OracleResult monomial_oracle(const Symbol& s) {
    if (!is_standard(s)) throw not_standard("monomial_oracle: symbol is not standard");
    const Bipartition target = bipartition_from_symbol(s);

    // Fixed window for the whole recursion: padding 2 below the smallest
    // non-identity entry; reduction steps only ever lower entries by 1.
    const int part_floor =
        std::min(target.k - target.bottom.length(), target.k + target.r - target.top.length());
    Symbol cur = symbol_from_bipartition(target, target.k + target.r - (part_floor - 2));

    MonomialWord word;
    int remaining = target.degree();
    while (remaining > 0) {
        const auto red = find_reduction(cur);
        if (!red) throw no_reduction("monomial_oracle: no reducible entry on a positive-degree symbol");
        if (red->j - 1 <= cur.floor())
            throw window_violation("monomial_oracle: reduction reached the window floor");
        word.letters.emplace_back(red->j - 1, red->exponent);
        cur = apply_reduction(cur, *red);
        remaining -= red->exponent;
    }

    FockVector vec;
    vec.add_term(Bipartition{Partition{}, Partition{}, target.k, target.r}, LaurentPoly{1});
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const OpKind kind = it->second == 2 ? OpKind::f_divided_square : OpKind::f;
        vec = act_fock({kind, it->first}, vec);
    }
    return OracleResult{std::move(vec), std::move(word)};
}

OracleResult monomial_oracle(const Bipartition& bp) {
    return monomial_oracle(symbol_from_bipartition(bp));
}

bool weight_check(const FockVector& vec) {
    if (vec.is_zero()) return true;
    const WeightVector first = sl_weight(vec.terms().begin()->first);
    for (const auto& [bp, c] : vec.terms())
        if (sl_weight(bp) != first) return false;
    return true;
}

} // namespace cb2
