#pragma once

#include <stdexcept>
#include <string>

namespace powsum {

struct InvalidExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A monomial without both an 'a' and a 'b' factor blocks division by a*b.
struct NotDivisibleByAB : std::domain_error {
    using std::domain_error::domain_error;
};

// Re-expansion of a completion identity failed; indicates a bug, not bad input.
struct IdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotATriple : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoBracket : std::logic_error {
    using std::logic_error::logic_error;
};

struct NegativeRadicand : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace powsum
