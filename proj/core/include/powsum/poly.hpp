// Sparse polynomials in the fixed variable set {C, a, b} with exact
// integer coefficients. This is the substrate for all identity checks;
// no GCDs, no factorization, no other variables.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "powsum/errors.hpp"
#include "powsum/numeric.hpp"

namespace powsum {

struct Monomial {
    unsigned deg_c = 0;
    unsigned deg_a = 0;
    unsigned deg_b = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    unsigned total_degree() const { return deg_c + deg_a + deg_b; }
};

class Poly {
public:
    // Canonical term order: descending lexicographic on (deg_c, deg_a, deg_b),
    // so C^2 sorts before C*a before a^2. Iteration and rendering follow it.
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    Poly() = default;
    explicit Poly(const BigInt& constant);
    Poly(const BigInt& coeff, const Monomial& m);

    static Poly var_c();
    static Poly var_a();
    static Poly var_b();

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of an exact monomial; zero when absent.
    BigInt coeff(const Monomial& m) const;

    // Largest deg_c over all terms; -1 for the zero polynomial.
    int degree_c() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

    Poly pow(unsigned k) const;

    BigInt eval(const BigInt& c_val, const BigInt& a_val, const BigInt& b_val) const;
    BigInt eval(long c_val, long a_val, long b_val) const {
        return eval(BigInt(c_val), BigInt(a_val), BigInt(b_val));
    }
    Rational eval(const Rational& c_val, const Rational& a_val,
                  const Rational& b_val) const;

    // Exact division by a*b. Every term must carry at least one a and one b;
    // otherwise throws NotDivisibleByAB (a violated identity, not a bug here).
    Poly div_ab() const;

    // Swap the roles of a and b.
    Poly swap_ab() const;

    // Canonical text form, e.g. "C^2 - 2*C*a + a^2"; zero renders "0".
    // This exact rendering is the golden-file format used by the CLI.
    std::string str() const;

private:
    void insert_term(const Monomial& m, const BigInt& coeff);

    TermMap terms_;
};

}  // namespace powsum
