// Checkable-claim predicates and the bounded exhaustive search for
// integer solutions of C^n = A^n + B^n. Every check is exact; grids are
// finite and reported as tested, never extrapolated.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "powsum/numeric.hpp"
#include "powsum/triples.hpp"

namespace powsum {

// Named witness values for a counterexample point, e.g. {("a",3),("b",7)}.
using Witness = std::vector<std::pair<std::string, BigInt>>;

struct ClaimReport {
    std::string claim_id;  // common_core | eq46_chain | eq63_grid | eq87_grid | eq89_grid
    std::string domain_tested;
    bool holds = true;
    std::vector<Witness> counterexamples;
    std::string notes;
};

struct SearchReport {
    int n;
    long bound;
    std::vector<Triple> solutions;  // leg order A <= B, sorted by (C, A)
    std::uint64_t candidates_checked = 0;
};

// Inclusive integer range.
struct GridRange {
    long lo;
    long hi;
};

bool check_common_core(const BigInt& c, const BigInt& a, const BigInt& b);

// Exact replay of the rational chain that pins C = 1/4 * (a + b) for the
// cubic case, treating (a+b) and [C - (a+b)] symbolically. Intermediate
// values are exposed for auditing.
struct RationalChain {
    Rational lhs_over_3ab;   // 2/3
    Rational s;              // 2/3 - 2 = -4/3, the ratio (a+b) / [C-(a+b)]
    Rational core_coeff;     // -3/4, so C - (a+b) = -3/4 * (a+b)
    Rational coefficient;    // 1/4, so C = 1/4 * (a+b)
};
RationalChain derive_eq46_chain();
Rational derive_eq46_coefficient();

// 2ab < 2ab * [6(a+b+1) + (2a^2 + 3ab + 2b^2)], exact integers.
bool check_eq63(const BigInt& a, const BigInt& b);

// Same quantity restated inside the general-n analysis.
bool check_eq87(const BigInt& a, const BigInt& b);

// For each (a, b, x) in the grid set C = a + b + x and test
// Q = a*b*P_n(C,a,b) / x^(n-2) > 2ab with exact rational comparison.
ClaimReport check_eq89_grid(int n, GridRange a_range, GridRange b_range,
                            GridRange x_range);

// Grid-claim runners with report packaging, used by the CLI.
ClaimReport run_claim_common_core(const BigInt& m_max);
ClaimReport run_claim_eq46();
ClaimReport run_claim_eq63(GridRange a_range, GridRange b_range);
ClaimReport run_claim_eq87(GridRange a_range, GridRange b_range);

// Exact defect C^n - A^n - B^n.
BigInt residual(int n, const BigInt& a, const BigInt& b, const BigInt& c);

// Exhaustive scan over 1 <= A <= B < C <= bound with precomputed n-th
// powers. Deterministic output for any worker count.
SearchReport search_solutions(int n, long bound, int jobs = 1);

}  // namespace powsum
