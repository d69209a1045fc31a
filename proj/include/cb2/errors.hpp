#pragma once

#include <stdexcept>
#include <string>

namespace cb2 {

// Exact division failed: no quotient q with q*b == a.
struct inexact_division : std::domain_error {
    explicit inexact_division(const std::string& what) : std::domain_error(what) {}
};

// Integer coefficient left the int64 range. Coefficients in scope stay tiny,
// so this firing means the input is outside the library's contract.
struct coefficient_overflow : std::overflow_error {
    explicit coefficient_overflow(const std::string& what) : std::overflow_error(what) {}
};

// An operation requiring a standard symbol was given a non-standard one.
struct not_standard : std::invalid_argument {
    explicit not_standard(const std::string& what) : std::invalid_argument(what) {}
};

// A nonzero part of a bipartition falls below the requested symbol window.
struct window_too_small : std::invalid_argument {
    explicit window_too_small(const std::string& what) : std::invalid_argument(what) {}
};

// An operator index touched the implicit identity region below the window.
struct window_violation : std::logic_error {
    explicit window_violation(const std::string& what) : std::logic_error(what) {}
};

// The oracle found no reduction step on a positive-degree symbol (a bug if
// the symbol is standard).
struct no_reduction : std::logic_error {
    explicit no_reduction(const std::string& what) : std::logic_error(what) {}
};

// |Z| - r must be even for r-admissible involutions to exist.
struct parity_violation : std::invalid_argument {
    explicit parity_violation(const std::string& what) : std::invalid_argument(what) {}
};

// The involution is not r-admissible for the given Z data.
struct inadmissible_involution : std::invalid_argument {
    explicit inadmissible_involution(const std::string& what) : std::invalid_argument(what) {}
};

struct not_implemented : std::logic_error {
    explicit not_implemented(const std::string& what) : std::logic_error(what) {}
};

} // namespace cb2
