// Real solutions C of F_n(C; a, b) = 0 above max(a, b), where
// F_n = (C-a)^n + (C-b)^n - C^n. Bisection runs in exact rational
// arithmetic (sign evaluations are exact); results are reported at
// 50 significant decimal digits.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>

#include "powsum/numeric.hpp"
#include "powsum/triples.hpp"

namespace powsum {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& q);
Real to_real(const BigInt& v);

struct ClosedFormN2 {
    Real value;                       // a + b +/- sqrt(2ab)
    bool exact;                       // 2ab is a perfect square
    std::optional<BigInt> exact_value;
};

// C = a + b +/- sqrt(2ab). Exact (integer) precisely when 2ab is a
// perfect square, i.e. when a*b = 2M^2 for some integer M.
ClosedFormN2 solve_closed_n2(const BigInt& a, const BigInt& b, Branch branch);

struct RealSolveResult {
    int n;
    BigInt a;
    BigInt b;
    Rational c_exact;     // final bisection midpoint, exact
    Real c_value;         // c_exact at 50 digits
    Real residual;        // F_n(c_exact), exact value rounded to 50 digits
    Real bracket_low;
    Real bracket_high;
    int iterations;
    double tol;           // requested relative step tolerance
};

// Exact F_n(C) at a rational point.
Rational constraint_value(int n, const BigInt& a, const BigInt& b,
                          const Rational& c);

// Bracketing bisection: low = max(a, b), high doubles from a + b + 1
// until F_n(high) > 0, then halve until the relative step is <= tol.
// The invariant F_n(low) < 0 <= F_n(high) holds at every step.
RealSolveResult solve_real(int n, const BigInt& a, const BigInt& b,
                           double tol = 1e-12);

// Consistency of the implicit radical forms for n = 3 and n = 4:
// evaluates C - (a+b) - radical(C) at the solved root. Near zero at a
// true root. Throws NegativeRadicand when the radicand is negative.
Real fixed_point_residual(int n, const RealSolveResult& result);

}  // namespace powsum
