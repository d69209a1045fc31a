#include "cb2/symbol.hpp"

#include "cb2/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cb2 {

namespace {

void check_row(const std::vector<int>& row, int floor, const char* name) {
    for (std::size_t t = 0; t < row.size(); ++t) {
        const int index = floor + 1 + static_cast<int>(t);
        if (row[t] < index) // entry below its index means a negative part
            throw std::invalid_argument(std::string("symbol row ") + name +
                                        " entry below its semi-infinite index");
        if (t > 0 && row[t] <= row[t - 1])
            throw std::invalid_argument(std::string("symbol row ") + name +
                                        " is not strictly increasing");
    }
}

} // namespace

Symbol::Symbol(std::vector<int> beta, std::vector<int> gamma, int floor, int k, int r)
    : beta_(std::move(beta)), gamma_(std::move(gamma)), floor_(floor), k_(k), r_(r) {
    if (r_ < 0) throw std::invalid_argument("symbol level r must be nonnegative");
    if (floor_ > k_) throw std::invalid_argument("symbol window floor above charge k");
    if (static_cast<int>(beta_.size()) != k_ + r_ - floor_)
        throw std::invalid_argument("symbol top row length != k + r - floor");
    if (static_cast<int>(gamma_.size()) != k_ - floor_)
        throw std::invalid_argument("symbol bottom row length != k - floor");
    check_row(beta_, floor_, "beta");
    check_row(gamma_, floor_, "gamma");
}

bool Symbol::beta_contains(int value) const {
    if (value <= floor_) return true;
    return std::binary_search(beta_.begin(), beta_.end(), value);
}

bool Symbol::gamma_contains(int value) const {
    if (value <= floor_) return true;
    return std::binary_search(gamma_.begin(), gamma_.end(), value);
}

std::string Symbol::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < beta_.size(); ++t) {
        if (t) os << ' ';
        os << beta_[t];
    }
    os << " / ";
    for (std::size_t t = 0; t < gamma_.size(); ++t) {
        if (t) os << ' ';
        os << gamma_[t];
    }
    os << ')';
    return os.str();
}

int default_window(const Bipartition& bp) {
    return std::max(bp.top.length(), bp.bottom.length()) + bp.r + 2;
}

Symbol symbol_from_bipartition(const Bipartition& bp, int window) {
    if (window < 1 || window < bp.r)
        throw std::invalid_argument("symbol window must cover the top row");
    if (bp.top.length() > window || bp.bottom.length() > window - bp.r)
        throw window_too_small("nonzero part falls below the symbol window");
    const int floor = bp.k + bp.r - window;
    std::vector<int> beta, gamma;
    beta.reserve(static_cast<std::size_t>(window));
    gamma.reserve(static_cast<std::size_t>(window - bp.r));
    for (int i = floor + 1; i <= bp.k + bp.r; ++i) beta.push_back(bp.top_part_at(i) + i);
    for (int i = floor + 1; i <= bp.k; ++i) gamma.push_back(bp.bottom_part_at(i) + i);
    return Symbol{std::move(beta), std::move(gamma), floor, bp.k, bp.r};
}

Symbol symbol_from_bipartition(const Bipartition& bp) {
    return symbol_from_bipartition(bp, default_window(bp));
}

Bipartition bipartition_from_symbol(const Symbol& s) {
    std::vector<int> top, bottom;
    for (std::size_t t = 0; t < s.beta().size(); ++t) {
        const int i = s.floor() + 1 + static_cast<int>(t);
        if (const int part = s.beta()[t] - i; part > 0) top.push_back(part);
    }
    for (std::size_t t = 0; t < s.gamma().size(); ++t) {
        const int i = s.floor() + 1 + static_cast<int>(t);
        if (const int part = s.gamma()[t] - i; part > 0) bottom.push_back(part);
    }
    return Bipartition{Partition{std::move(top)}, Partition{std::move(bottom)}, s.k(), s.r()};
}

Symbol with_window(const Symbol& s, int window) {
    return symbol_from_bipartition(bipartition_from_symbol(s), window);
}

bool is_standard(const Symbol& s) {
    // beta_i <= gamma_i for all window indices i <= k; below the window the
    // rows agree by construction.
    for (std::size_t t = 0; t < s.gamma().size(); ++t)
        if (s.beta()[t] > s.gamma()[t]) return false;
    return true;
}

bool is_standard(const Bipartition& bp) {
    const int lo = bp.k - std::max(bp.bottom.length(), std::max(0, bp.top.length() - bp.r));
    for (int i = lo; i <= bp.k; ++i)
        if (bp.top_part_at(i) > bp.bottom_part_at(i)) return false;
    return true;
}

int degree(const Bipartition& bp) { return bp.degree(); }

int degree_from_symbol(const Symbol& s) {
    auto range_sum = [](int lo, int hi) { // lo..hi inclusive
        return (hi < lo) ? 0 : (hi + lo) * (hi - lo + 1) / 2;
    };
    const int entry_sum = std::accumulate(s.beta().begin(), s.beta().end(), 0) +
                          std::accumulate(s.gamma().begin(), s.gamma().end(), 0);
    return entry_sum - range_sum(s.floor() + 1, s.k() + s.r()) - range_sum(s.floor() + 1, s.k());
}

ContentMultiset symbol_content(const Symbol& s) {
    ContentMultiset out;
    for (int e : s.beta()) out.add(e);
    for (int e : s.gamma()) out.add(e);
    return out;
}

std::vector<Symbol> enumerate_standard(int m, int k, int r, int window) {
    std::vector<Symbol> out;
    for (const auto& bp : enumerate_bipartitions(m, k, r))
        if (is_standard(bp)) out.push_back(symbol_from_bipartition(bp, window));
    return out;
}

std::vector<Symbol> enumerate_standard(int m, int k, int r) {
    return enumerate_standard(m, k, r, m + r + 2);
}

} // namespace cb2
