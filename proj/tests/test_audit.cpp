#include <doctest.h>

#include "powsum/audit.hpp"
#include "powsum/completion.hpp"
#include "powsum/errors.hpp"

using namespace powsum;

TEST_CASE("common core condition") {
    CHECK(check_common_core(5, 1, 2));
    CHECK(!check_common_core(1, 1, 2));
    CHECK(!check_common_core(3, 1, 2));  // equality is not "greater"
}

TEST_CASE("rational chain pins the quarter coefficient") {
    auto chain = derive_eq46_chain();
    CHECK(chain.lhs_over_3ab == make_rational(2, 3));
    CHECK(chain.s == make_rational(-4, 3));
    CHECK(chain.core_coeff == make_rational(-3, 4));
    CHECK(chain.coefficient == make_rational(1, 4));
    CHECK(derive_eq46_coefficient() == make_rational(1, 4));
}

TEST_CASE("quartic gap inequality") {
    CHECK(check_eq63(1, 1));  // 2 < 2 * (6*3 + 7) = 50
    CHECK(check_eq63(1, 2));  // 4 < 4 * (6*4 + 16) = 160
    CHECK(check_eq63(100, 100));
    CHECK(check_eq87(1, 1));
    CHECK(check_eq87(2, 4));
    CHECK(check_eq87(1, 1000));
}

TEST_CASE("general-n grid claim") {
    auto rep = check_eq89_grid(4, {1, 1}, {1, 1}, {1, 1});
    CHECK(rep.holds);
    // Single point (a=b=x=1): Q = 1*P_4(3,1,1)/1 = 50 > 2.
    CHECK(complete_power(4).p_poly.eval(3, 1, 1) == 50);

    auto rep3 = check_eq89_grid(3, {1, 1}, {2, 2}, {1, 1});
    CHECK(rep3.holds);
    CHECK(complete_power(3).p_poly.eval(4, 1, 2) == 15);

    auto small = check_eq89_grid(3, {1, 5}, {1, 5}, {1, 5});
    CHECK(small.holds);
    CHECK(small.counterexamples.empty());
    CHECK_THROWS_AS(check_eq89_grid(2, {1, 1}, {1, 1}, {1, 1}),
                    InvalidExponent);
}

TEST_CASE("cubic slice matches the direct quotient") {
    Poly p3 = complete_power(3).p_poly;
    for (long a = 1; a <= 10; ++a) {
        for (long b = 1; b <= 10; ++b) {
            for (long x = 1; x <= 10; ++x) {
                BigInt av(a), bv(b), c(a + b + x);
                Rational q =
                    make_rational(av * bv * p3.eval(c, av, bv), BigInt(x));
                Rational direct = make_rational(
                    3 * av * bv * (2 * c - (av + bv)), BigInt(x));
                CHECK(q == direct);
            }
        }
    }
}

TEST_CASE("claim runners") {
    CHECK(run_claim_common_core(30).holds);
    CHECK(run_claim_eq46().holds);
    CHECK(run_claim_eq63({1, 20}, {1, 20}).holds);
    CHECK(run_claim_eq87({1, 20}, {1, 20}).holds);
}

TEST_CASE("exact residual") {
    CHECK(residual(2, 3, 4, 5) == 0);
    CHECK(residual(3, 3, 4, 5) == 34);
    CHECK(residual(7, 0, 0, 0) == 0);
}

TEST_CASE("bounded exhaustive search") {
    auto rep = search_solutions(2, 13);
    REQUIRE(rep.solutions.size() == 3);
    CHECK(rep.solutions[0] == Triple{3, 4, 5});
    CHECK(rep.solutions[1] == Triple{6, 8, 10});
    CHECK(rep.solutions[2] == Triple{5, 12, 13});

    CHECK(search_solutions(2, 4).solutions.empty());
    CHECK(search_solutions(3, 60).solutions.empty());
    CHECK_THROWS_AS(search_solutions(1, 10), InvalidExponent);

    for (const auto& t : rep.solutions)
        CHECK(residual(2, t.big_a, t.big_b, t.hyp) == 0);
}

TEST_CASE("search is deterministic across worker counts") {
    auto serial = search_solutions(2, 150, 1);
    for (int jobs : {2, 3, 7}) {
        auto parallel = search_solutions(2, 150, jobs);
        CHECK(parallel.solutions == serial.solutions);
        CHECK(parallel.candidates_checked == serial.candidates_checked);
    }
}
