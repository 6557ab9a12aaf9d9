#include <doctest.h>

#include <algorithm>
#include <set>

#include "powsum/errors.hpp"
#include "powsum/triples.hpp"

using namespace powsum;

namespace {
std::set<Triple> valid_set(const std::vector<GenerationRecord>& records) {
    std::set<Triple> out;
    for (const auto& rec : records)
        if (rec.triple) out.insert(*rec.triple);
    return out;
}
}  // namespace

TEST_CASE("factor pairs of 2*M^2") {
    using Pairs = std::vector<std::pair<BigInt, BigInt>>;
    CHECK(factor_pairs(1) == Pairs{{1, 2}});
    CHECK(factor_pairs(2) == Pairs{{1, 8}, {2, 4}});
    CHECK(factor_pairs(3) == Pairs{{1, 18}, {2, 9}, {3, 6}});
}

TEST_CASE("generation from parameters") {
    auto rec = generate({1, 1, 2, Branch::plus});
    REQUIRE(rec.triple.has_value());
    CHECK(rec.triple->big_a == 4);
    CHECK(rec.triple->big_b == 3);
    CHECK(rec.triple->hyp == 5);

    auto rec2 = generate({2, 1, 8, Branch::plus});
    REQUIRE(rec2.triple.has_value());
    CHECK(*rec2.triple == Triple{12, 5, 13});

    auto degenerate = generate({1, 1, 2, Branch::minus});
    CHECK(!degenerate.triple.has_value());
    CHECK(degenerate.raw_c == 1);
    CHECK(degenerate.raw_a == 0);
    CHECK(degenerate.degenerate_reason == "non-positive leg");

    CHECK_THROWS_AS(generate({1, 1, 3, Branch::plus}), InvalidParams);
}

TEST_CASE("enumeration by M bound") {
    auto records1 = enumerate_triples(1);
    REQUIRE(records1.size() == 2);
    CHECK(records1[0].triple.has_value());
    CHECK(!records1[1].triple.has_value());

    CHECK(valid_set(enumerate_triples(2)) ==
          std::set<Triple>{{4, 3, 5}, {12, 5, 13}, {8, 6, 10}});
    CHECK(valid_set(enumerate_triples(3)) ==
          std::set<Triple>{{4, 3, 5},
                           {12, 5, 13},
                           {8, 6, 10},
                           {24, 7, 25},
                           {15, 8, 17},
                           {12, 9, 15}});
}

TEST_CASE("parameter recovery") {
    auto p = recover_params({4, 3, 5});
    CHECK(p.m == 1);
    CHECK(p.a == 1);
    CHECK(p.b == 2);

    auto p2 = recover_params({12, 5, 13});
    CHECK(p2.m == 2);
    CHECK(p2.a == 1);
    CHECK(p2.b == 8);

    CHECK_THROWS_AS(recover_params({2, 3, 4}), NotATriple);
}

TEST_CASE("euclid oracle") {
    CHECK(euclid_oracle(5) == std::vector<Triple>{{4, 3, 5}});
    CHECK(euclid_oracle(13) ==
          std::vector<Triple>{{4, 3, 5}, {8, 6, 10}, {12, 5, 13}});
    auto t25 = euclid_oracle(25);
    CHECK(t25.size() == 8);
    CHECK(std::count(t25.begin(), t25.end(), Triple{24, 7, 25}) == 1);
    CHECK(std::count(t25.begin(), t25.end(), Triple{20, 15, 25}) == 1);
}

TEST_CASE("soundness of generated triples") {
    for (const auto& rec : enumerate_triples(60)) {
        if (!rec.triple) continue;
        const Triple& t = *rec.triple;
        CHECK(t.big_a * t.big_a + t.big_b * t.big_b == t.hyp * t.hyp);
        CHECK(t.hyp > t.big_a);
        CHECK(t.hyp > t.big_b);
        // Common core: C - (a+b) = 2M > 0 on the plus branch.
        CHECK(rec.raw_c - (rec.params.a + rec.params.b) == 2 * rec.params.m);
    }
}

TEST_CASE("minus branch always degenerates") {
    for (const auto& rec : enumerate_triples(50)) {
        if (rec.params.branch != Branch::minus) continue;
        CHECK(!rec.triple.has_value());
        CHECK(std::min(rec.raw_a, rec.raw_b) <= 0);
    }
}

TEST_CASE("completeness against the oracle at desk scale") {
    const long c_max = 100;
    std::set<Triple> generated;
    for (const auto& t : valid_set(enumerate_triples(c_max)))
        if (t.hyp <= c_max) generated.insert(t);
    auto oracle = euclid_oracle(c_max);
    CHECK(generated == std::set<Triple>(oracle.begin(), oracle.end()));

    for (const auto& t : oracle) {
        TripleParams p = recover_params(t);  // must not throw
        auto rec = generate(p);
        REQUIRE(rec.triple.has_value());
        bool same = *rec.triple == t;
        bool swapped = rec.triple->big_a == t.big_b &&
                       rec.triple->big_b == t.big_a && rec.triple->hyp == t.hyp;
        CHECK((same || swapped));
    }
}

TEST_CASE("primitivity flag") {
    CHECK(is_primitive({4, 3, 5}));
    CHECK(!is_primitive({8, 6, 10}));
}
