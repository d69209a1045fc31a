#pragma once

// Exact Laurent polynomials in one variable v with integer coefficients.
// Canonical sparse form: a map exponent -> coefficient with no zero entries.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace cb2 {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant);

    static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);
    // The variable v (or a power of it).
    static LaurentPoly v(int exponent = 1) { return monomial(exponent); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::int64_t coefficient(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }
    int min_exponent() const; // throws std::logic_error on the zero polynomial
    int max_exponent() const;

    // The bar involution v -> v^-1.
    LaurentPoly bar() const;
    // Sum of coefficients (specialization v -> 1).
    std::int64_t eval_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly&) const = default;

    // Plain-text form with ascending exponents, e.g. "v^-1 + 2 + v^3".
    std::string str() const;

private:
    std::map<int, std::int64_t> terms_;

    void add_term(int exponent, std::int64_t coefficient);
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Exact quotient a / b; throws inexact_division if none exists and
// std::invalid_argument if b is zero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Balanced quantum integer [n] = v^{n-1} + v^{n-3} + ... + v^{1-n}, [-n] = -[n].
LaurentPoly quantum_integer(int n);

} // namespace cb2
