#include <doctest.h>

#include <random>

#include "powsum/poly.hpp"

using namespace powsum;

namespace {

Poly C() { return Poly::var_c(); }
Poly A() { return Poly::var_a(); }
Poly B() { return Poly::var_b(); }
Poly K(long v) { return Poly(BigInt(v)); }

Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    Poly p;
    int terms = n_terms(rng);
    for (int i = 0; i < terms; ++i) {
        Monomial m{static_cast<unsigned>(deg(rng)),
                   static_cast<unsigned>(deg(rng)),
                   static_cast<unsigned>(deg(rng))};
        p = p + Poly(BigInt(coeff(rng)), m);
    }
    return p;
}

BigInt random_digits(std::mt19937& rng, int digits) {
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> lead(1, 9);
    std::string s;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) s += '-';
    s += static_cast<char>('0' + lead(rng));
    for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + digit(rng));
    return parse_bigint(s);
}

}  // namespace

TEST_CASE("poly addition") {
    CHECK((C() + (-C())).is_zero());
    CHECK((C() * C() + A()) + B() == C() * C() + A() + B());
    Poly two_ab = K(2) * A() * B();
    CHECK(two_ab + two_ab == K(4) * A() * B());
}

TEST_CASE("poly multiplication") {
    Poly c_minus_a = C() - A();
    CHECK(c_minus_a * c_minus_a ==
          C() * C() - K(2) * C() * A() + A() * A());
    CHECK((C() * A() * B() * Poly()).is_zero());
    Poly a_plus_b = A() + B();
    CHECK(a_plus_b * a_plus_b - (A() * A() + B() * B()) == K(2) * A() * B());
}

TEST_CASE("poly powers") {
    Poly base = C() - (A() + B());
    Poly expected = C() * C() - K(2) * C() * (A() + B()) + A() * A() +
                    K(2) * A() * B() + B() * B();
    CHECK(base.pow(2) == expected);

    CHECK((C() - A()).pow(3) ==
          C().pow(3) - K(3) * C().pow(2) * A() + K(3) * C() * A().pow(2) -
              A().pow(3));
    CHECK((C() - B()).pow(4) ==
          C().pow(4) - K(4) * C().pow(3) * B() + K(6) * C().pow(2) * B().pow(2) -
              K(4) * C() * B().pow(3) + B().pow(4));
    CHECK((C() * A()).pow(0) == K(1));
}

TEST_CASE("poly evaluation") {
    Poly two_ab = K(2) * A() * B();
    CHECK(two_ab.eval(5, 1, 2) == 4);
    CHECK(Poly().eval(7, -3, 11) == 0);
    Poly f2 = C() * C() - K(2) * C() * (A() + B()) + A() * A() + B() * B();
    CHECK(f2.eval(5, 1, 2) == 0);
}

TEST_CASE("division by a*b") {
    CHECK((K(2) * A() * B()).div_ab() == K(2));
    Poly p = K(6) * C() * A() * B() - K(3) * A().pow(2) * B() -
             K(3) * A() * B().pow(2);
    CHECK(p.div_ab() == K(6) * C() - K(3) * A() - K(3) * B());
    CHECK_THROWS_AS((C() * C()).div_ab(), NotDivisibleByAB);
}

TEST_CASE("canonical rendering") {
    Poly p = C() * C() - K(2) * C() * A() + A() * A();
    CHECK(p.str() == "C^2 - 2*C*a + a^2");
    CHECK(Poly().str() == "0");
    CHECK(K(-7).str() == "-7");
    CHECK((K(6) * C() - K(3) * A() - K(3) * B()).str() == "6*C - 3*a - 3*b");
    CHECK(A().pow(2).str() == "a^2");
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(4422);
    std::uniform_int_distribution<long> point(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        Poly p = random_poly(rng), q = random_poly(rng);
        BigInt c(point(rng)), a(point(rng)), b(point(rng));
        CHECK((p * q).eval(c, a, b) == p.eval(c, a, b) * q.eval(c, a, b));
        CHECK((p + q).eval(c, a, b) == p.eval(c, a, b) + q.eval(c, a, b));
    }
}

TEST_CASE("div_ab is a left inverse of multiplying by a*b") {
    std::mt19937 rng(991);
    Poly ab = A() * B();
    for (int i = 0; i < 1000; ++i) {
        Poly q = random_poly(rng);
        Poly p = ab * q;
        CHECK(ab * p.div_ab() == p);
    }
}

TEST_CASE("decimal round-trip on 200-digit values") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt v = random_digits(rng, 200);
        CHECK(parse_bigint(to_decimal(v)) == v);

        BigInt den = abs(random_digits(rng, 200));
        Rational q = make_rational(v, den);
        Rational parsed(to_decimal(q));
        parsed.canonicalize();
        CHECK(parsed == q);
    }
}
