#pragma once

// Chevalley generators and divided powers acting on the level-2 Fock space
// through the tensor coproduct, and the recursive monomial oracle that
// recomputes every canonical basis vector as a product of divided powers of
// the f generators applied to the highest weight vector.

#include "cb2/canonical.hpp"
#include "cb2/laurent.hpp"
#include "cb2/symbol.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cb2 {

enum class OpKind { e, f, t, t_inverse, f_divided_square };

struct Operator {
    OpKind kind;
    int index;
};

struct MonomialWord {
    // (index j, exponent in {1,2}) in product order: the first letter is the
    // outermost factor, applied last.
    std::vector<std::pair<int, int>> letters;

    bool operator==(const MonomialWord&) const = default;
};

// One Chevalley generator on a single row (a window of a semi-infinite strictly
// increasing sequence). Returns nullopt on annihilation. The row is unchanged
// for t and t_inverse, which only contribute the coefficient. Throws
// window_violation when op.index is at or below the floor, and
// std::invalid_argument for f_divided_square (a Fock-space-level operator).
std::optional<std::pair<std::vector<int>, LaurentPoly>>
act_row(const Operator& op, const std::vector<int>& row, int floor);

// Linear extension over the standard basis via the coproduct rules. The
// divided square is f applied twice followed by exact division by [2].
FockVector act_fock(const Operator& op, const FockVector& vec);

struct OracleResult {
    FockVector vector;
    MonomialWord word;
};

// Follows the degree-reduction recursion: peel one reducible entry at a time
// down to the highest weight symbol, then apply the recorded f-word. The
// resulting vector equals canonical_vector(s) exactly.
OracleResult monomial_oracle(const Symbol& s);
OracleResult monomial_oracle(const Bipartition& bp);

// True iff all support labels share one cell content (one weight space).
bool weight_check(const FockVector& vec);

} // namespace cb2
