#include "powsum/solver.hpp"

#include "powsum/errors.hpp"

namespace powsum {

Real to_real(const BigInt& v) { return Real(v.get_str(10)); }

Real to_real(const Rational& q) {
    return to_real(BigInt(q.get_num())) / to_real(BigInt(q.get_den()));
}

ClosedFormN2 solve_closed_n2(const BigInt& a, const BigInt& b, Branch branch) {
    BigInt two_ab = 2 * a * b;
    auto [root, exact] = sqrt_exact(two_ab);
    ClosedFormN2 out;
    out.exact = exact;
    Real sqrt_part = exact ? to_real(root) : sqrt(to_real(two_ab));
    Real sum = to_real(BigInt(a + b));
    if (branch == Branch::plus) {
        out.value = sum + sqrt_part;
        if (exact) out.exact_value = a + b + root;
    } else {
        out.value = sum - sqrt_part;
        if (exact) out.exact_value = a + b - root;
    }
    return out;
}

namespace {
Rational pow_rat(const Rational& base, int exp) {
    Rational out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}
}  // namespace

Rational constraint_value(int n, const BigInt& a, const BigInt& b,
                          const Rational& c) {
    return pow_rat(c - Rational(a), n) + pow_rat(c - Rational(b), n) -
           pow_rat(c, n);
}

RealSolveResult solve_real(int n, const BigInt& a, const BigInt& b,
                           double tol) {
    if (n < 2) throw InvalidExponent("exponent must be >= 2");
    if (a < 1 || b < 1) throw InvalidParams("a and b must be positive");
    if (tol <= 0) throw InvalidParams("tol must be positive");

    Rational low(a > b ? a : b);
    if (constraint_value(n, a, b, low) >= 0)
        throw NoBracket("F_n(max(a,b)) >= 0");
    Rational high(a + b + 1);
    while (constraint_value(n, a, b, high) <= 0) high *= 2;

    Rational tol_rat(tol);
    int iterations = 0;
    Rational b_low = low, b_high = high;
    while (b_high - b_low > tol_rat * b_low) {
        Rational mid = (b_low + b_high) / 2;
        if (constraint_value(n, a, b, mid) < 0)
            b_low = mid;
        else
            b_high = mid;
        ++iterations;
    }

    RealSolveResult res;
    res.n = n;
    res.a = a;
    res.b = b;
    res.c_exact = (b_low + b_high) / 2;
    res.c_value = to_real(res.c_exact);
    res.residual = to_real(constraint_value(n, a, b, res.c_exact));
    res.bracket_low = to_real(b_low);
    res.bracket_high = to_real(b_high);
    res.iterations = iterations;
    res.tol = tol;
    return res;
}

Real fixed_point_residual(int n, const RealSolveResult& result) {
    if (n != 3 && n != 4)
        throw InvalidExponent("radical forms exist for n = 3 and n = 4 only");
    if (n != result.n) throw InvalidParams("result exponent mismatch");
    const Rational c = result.c_exact;
    const Rational a(result.a), b(result.b);
    Rational radicand;
    if (n == 3) {
        radicand = 3 * a * b * (2 * c - (a + b));
    } else {
        radicand = 2 * a * b *
                   (6 * c * c - 6 * c * (a + b) +
                    (2 * a * a + 3 * a * b + 2 * b * b));
    }
    if (radicand < 0)
        throw NegativeRadicand("radicand is negative at C = " +
                               to_decimal(c));
    Real root = pow(to_real(radicand), Real(1) / n);
    return to_real(c - (a + b)) - root;
}

}  // namespace powsum
