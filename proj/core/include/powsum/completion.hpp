// Completion of the nth power: the factor P_n in the identity
// [C - (a+b)]^n - F_n = a*b*P_n, where F_n = (C-a)^n + (C-b)^n - C^n.
// The identity is unconditional, so verifying it is a pure structural check.
#pragma once

#include <vector>

#include "powsum/poly.hpp"

namespace powsum {

struct CompletionIdentity {
    int n;          // exponent, >= 2
    Poly p_poly;    // the factor multiplying a*b
    bool verified;  // re-expansion check passed
};

// One row of signed binomial coefficients (-1)^k * binom(n, k), with the
// count of summands used when completing the nth power.
struct SignedPascalRow {
    int n;
    std::vector<BigInt> coefficients;  // length n + 1
    int applicable_terms;              // always n - 1
};

// F_n = (C-a)^n + (C-b)^n - C^n, fully expanded. Its integer zeros are
// exactly the solutions of C^n = A^n + B^n under A = C-a, B = C-b.
Poly constraint_poly(int n);

// Computes P_n via exact division of [C-(a+b)]^n - F_n by a*b and
// re-verifies by re-expansion. Throws IdentityViolation on mismatch
// (which would indicate a bug, never bad input).
CompletionIdentity complete_power(int n);

// Independent check that [C-(a+b)]^n - F_n - a*b*P_n expands to zero.
bool verify_master_identity(int n);

SignedPascalRow pascal_row(int n);

// The n-1 summands of P_n grouped by descending C-power; their sum is P_n.
// For n = 4: [12*C^2, -12*C*a - 12*C*b, 4*a^2 + 6*a*b + 4*b^2].
std::vector<Poly> completion_terms(int n);

}  // namespace powsum
