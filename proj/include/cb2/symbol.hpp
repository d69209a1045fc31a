#pragma once

// Two-row symbols: finite windows of the semi-infinite arrays attached to a
// charged bipartition. The top row beta holds the entries beta_i = lambda_i + i
// for window indices floor+1 <= i <= k+r, the bottom row gamma the entries
// gamma_i = mu_i + i for floor+1 <= i <= k; below the window both rows equal
// the identity sequence beta_i = gamma_i = i.

#include "cb2/partition.hpp"

#include <string>
#include <vector>

namespace cb2 {

class Symbol {
public:
    Symbol(std::vector<int> beta, std::vector<int> gamma, int floor, int k, int r);

    const std::vector<int>& beta() const { return beta_; }
    const std::vector<int>& gamma() const { return gamma_; }
    int floor() const { return floor_; }
    int k() const { return k_; }
    int r() const { return r_; }

    bool beta_contains(int value) const;  // includes the implicit identity tail
    bool gamma_contains(int value) const;

    // "(1 3 5 8 9 / 3 6 7 10)"
    std::string str() const;

    auto operator<=>(const Symbol&) const = default;

private:
    std::vector<int> beta_;
    std::vector<int> gamma_;
    int floor_;
    int k_;
    int r_;
};

// Default window: max nonzero parts among the two components, plus r + 2.
int default_window(const Bipartition& bp);

// window = number of explicit top-row indices, i.e. floor = k + r - window.
// Throws window_too_small if a nonzero part falls below the window.
Symbol symbol_from_bipartition(const Bipartition& bp, int window);
Symbol symbol_from_bipartition(const Bipartition& bp);
Bipartition bipartition_from_symbol(const Symbol& s);
// Same symbol re-materialized with a different window.
Symbol with_window(const Symbol& s, int window);

bool is_standard(const Symbol& s);
bool is_standard(const Bipartition& bp);

int degree(const Bipartition& bp);
// The window form sum(beta) + sum(gamma) - sum of identity entries; agrees
// with degree(bipartition) on every valid window.
int degree_from_symbol(const Symbol& s);

// Multiset of all window entries of both rows.
ContentMultiset symbol_content(const Symbol& s);

std::vector<Symbol> enumerate_standard(int m, int k, int r, int window);
std::vector<Symbol> enumerate_standard(int m, int k, int r); // window m + r + 2

} // namespace cb2
