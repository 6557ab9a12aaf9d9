// The M-parameterized integer solution set for C^2 = A^2 + B^2:
// pick M >= 1, factor 2*M^2 = a*b with a < b, set C = a + b +/- 2M,
// A = C - a, B = C - b. The minus branch is always degenerate for
// positive factor pairs and is reported, never silently dropped.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powsum/numeric.hpp"

namespace powsum {

enum class Branch { plus, minus };

inline const char* branch_name(Branch b) {
    return b == Branch::plus ? "plus" : "minus";
}

struct TripleParams {
    BigInt m;
    BigInt a;
    BigInt b;
    Branch branch = Branch::plus;
};

struct Triple {
    BigInt big_a;
    BigInt big_b;
    BigInt hyp;

    friend bool operator==(const Triple& l, const Triple& r) {
        return l.big_a == r.big_a && l.big_b == r.big_b && l.hyp == r.hyp;
    }
    friend bool operator<(const Triple& l, const Triple& r) {
        if (l.big_a != r.big_a) return l.big_a < r.big_a;
        if (l.big_b != r.big_b) return l.big_b < r.big_b;
        return l.hyp < r.hyp;
    }
};

struct GenerationRecord {
    TripleParams params;
    std::optional<Triple> triple;  // present iff both legs are positive
    // Raw values computed from the branch, kept for degenerate reporting.
    BigInt raw_a;
    BigInt raw_b;
    BigInt raw_c;
    std::optional<std::string> degenerate_reason;
};

// All pairs a < b with a*b = 2*M^2, ascending in a. Negative factor pairs
// are excluded; the parameterization here uses positive factors only.
std::vector<std::pair<BigInt, BigInt>> factor_pairs(const BigInt& m);

// Throws InvalidParams unless a*b = 2*M^2.
GenerationRecord generate(const TripleParams& params);

// Every record for M in [1, m_max], both branches, ordered by
// (M ascending, a ascending, plus before minus).
std::vector<GenerationRecord> enumerate_triples(const BigInt& m_max);

// Inverts the parameterization: a = C - A, b = C - B, M = sqrt(ab/2).
// Throws NotATriple when A^2 + B^2 != C^2 and NotRepresentable when
// ab/2 is not a perfect square (an audit finding, not an expected case).
TripleParams recover_params(const Triple& t);

// Independent completeness oracle: classical (m^2-n^2, 2mn, m^2+n^2)
// parameterization with multipliers. Canonical leg order (A > B),
// sorted by (C, A). Test oracle only.
std::vector<Triple> euclid_oracle(const BigInt& c_max);

bool is_primitive(const Triple& t);

}  // namespace powsum
