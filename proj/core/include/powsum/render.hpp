// Deterministic text renderings shared by the CLI and the golden tests.
#pragma once

#include <string>
#include <vector>

#include "powsum/completion.hpp"
#include "powsum/triples.hpp"

namespace powsum {

// Aligned coefficient table for n = 2..n_max. The bracketed run marks the
// entries used when completing the nth power (positions 2..n); the trailing
// columns give the row exponent and the applicable-term count A = n - 1.
std::string format_pascal_table(int n_max);

// One row of signed coefficients, space separated: "1 -3 3 -1".
std::string format_pascal_row(const SignedPascalRow& row);

// Structured text record for a completion identity: n, P_n, its grouped
// summands, and the verification flag.
std::string format_completion_record(const CompletionIdentity& id);

// CSV with header "M,a,b,branch,A,B,C,valid". Degenerate rows carry the
// raw branch values and valid=false; they appear only when requested.
std::string format_triples_csv(const std::vector<GenerationRecord>& records,
                               bool include_degenerate);

}  // namespace powsum
