#include "cb2/laurent.hpp"

#include "cb2/errors.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cb2 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw coefficient_overflow("integer overflow in coefficient addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw coefficient_overflow("integer overflow in coefficient multiplication");
    return out;
}

} // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_[exponent] = coefficient;
    return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

std::int64_t LaurentPoly::eval_at_one() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        if (c == INT64_MIN) throw coefficient_overflow("negation overflow");
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, checked_mul(ca, cb));
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (c == INT64_MIN) throw coefficient_overflow("negation overflow");
        out.terms_.emplace(e, -c);
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::int64_t abs_c = c;
        if (first) {
            if (c < 0) { os << '-'; abs_c = -c; }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            abs_c = c < 0 ? -c : c;
        }
        if (abs_c != 1 || e == 0) os << abs_c;
        if (e != 0) {
            os << 'v';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    if (a.is_zero()) return LaurentPoly{};

    // Eliminate lowest terms of the remainder against the lowest term of b.
    const int b_lo = b.min_exponent();
    const std::int64_t b_lo_c = b.coefficient(b_lo);
    const int q_max = a.max_exponent() - b.max_exponent();

    LaurentPoly rem = a;
    LaurentPoly quotient;
    while (!rem.is_zero()) {
        const int e = rem.min_exponent() - b_lo;
        if (e > q_max) throw inexact_division("div_exact: nonzero remainder");
        const std::int64_t c = rem.coefficient(rem.min_exponent());
        if (c % b_lo_c != 0) throw inexact_division("div_exact: coefficient not divisible");
        const LaurentPoly term = LaurentPoly::monomial(e, c / b_lo_c);
        quotient += term;
        rem -= term * b;
    }
    return quotient;
}

LaurentPoly quantum_integer(int n) {
    if (n == 0) return LaurentPoly{};
    const bool negative = n < 0;
    const int m = negative ? -n : n;
    LaurentPoly out;
    for (int i = 0; i < m; ++i) out += LaurentPoly::monomial(m - 1 - 2 * i, negative ? -1 : 1);
    return out;
}

} // namespace cb2
