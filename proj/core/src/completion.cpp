#include "powsum/completion.hpp"

#include "powsum/errors.hpp"

namespace powsum {

namespace {
void require_n(int n, int min = 2) {
    if (n < min)
        throw InvalidExponent("exponent must be >= " + std::to_string(min) +
                              ", got " + std::to_string(n));
}

Poly core_poly(int n) {
    // [C - (a + b)]^n
    Poly base = Poly::var_c() - Poly::var_a() - Poly::var_b();
    return base.pow(static_cast<unsigned>(n));
}
}  // namespace

Poly constraint_poly(int n) {
    require_n(n);
    Poly c = Poly::var_c();
    Poly leg_a = (c - Poly::var_a()).pow(static_cast<unsigned>(n));
    Poly leg_b = (c - Poly::var_b()).pow(static_cast<unsigned>(n));
    return leg_a + leg_b - c.pow(static_cast<unsigned>(n));
}

CompletionIdentity complete_power(int n) {
    require_n(n);
    Poly numerator = core_poly(n) - constraint_poly(n);
    Poly p;
    try {
        p = numerator.div_ab();
    } catch (const NotDivisibleByAB& e) {
        throw IdentityViolation(std::string("completion factor not divisible by a*b: ") +
                                e.what());
    }
    Poly ab = Poly::var_a() * Poly::var_b();
    if (!(ab * p == numerator))
        throw IdentityViolation("re-expansion of a*b*P_n mismatches");
    return CompletionIdentity{n, p, true};
}

bool verify_master_identity(int n) {
    require_n(n);
    CompletionIdentity id = complete_power(n);
    Poly ab = Poly::var_a() * Poly::var_b();
    Poly defect = core_poly(n) - constraint_poly(n) - ab * id.p_poly;
    return defect.is_zero();
}

SignedPascalRow pascal_row(int n) {
    require_n(n);
    SignedPascalRow row;
    row.n = n;
    row.applicable_terms = n - 1;
    row.coefficients.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        BigInt c = binomial(static_cast<unsigned long>(n),
                            static_cast<unsigned long>(k));
        if (k % 2 == 1) c = -c;
        row.coefficients.push_back(c);
    }
    return row;
}

std::vector<Poly> completion_terms(int n) {
    require_n(n);
    Poly p = complete_power(n).p_poly;
    // Group by C-power, descending from C^(n-2); exactly n-1 groups.
    std::vector<Poly> groups(static_cast<size_t>(n - 1));
    for (const auto& [m, coeff] : p.terms()) {
        size_t idx = static_cast<size_t>(n - 2) - m.deg_c;
        groups[idx] = groups[idx] + Poly(coeff, m);
    }
    return groups;
}

}  // namespace powsum
