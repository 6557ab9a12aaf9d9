#include "powsum/audit.hpp"

#include <algorithm>
#include <thread>

#include "powsum/completion.hpp"
#include "powsum/errors.hpp"

namespace powsum {

bool check_common_core(const BigInt& c, const BigInt& a, const BigInt& b) {
    return c > a + b;
}

RationalChain derive_eq46_chain() {
    RationalChain chain;
    // Setting [C-(a+b)]^2 = 2ab inside 2ab = 3ab*(2 + s), s = (a+b)/[C-(a+b)]:
    chain.lhs_over_3ab = make_rational(2, 3);
    chain.s = chain.lhs_over_3ab - 2;                  // -4/3
    chain.core_coeff = 1 / chain.s;                    // C-(a+b) = -3/4*(a+b)
    chain.coefficient = chain.core_coeff + 1;          // C = 1/4*(a+b)
    return chain;
}

Rational derive_eq46_coefficient() { return derive_eq46_chain().coefficient; }

namespace {
// Bracketed factor of the quartic gap bound: 6(a+b+1) + (2a^2 + 3ab + 2b^2).
BigInt gap_factor(const BigInt& a, const BigInt& b) {
    return 6 * (a + b + 1) + (2 * a * a + 3 * a * b + 2 * b * b);
}
}  // namespace

bool check_eq63(const BigInt& a, const BigInt& b) {
    BigInt two_ab = 2 * a * b;
    return two_ab < two_ab * gap_factor(a, b);
}

bool check_eq87(const BigInt& a, const BigInt& b) {
    BigInt two_ab = 2 * a * b;
    return two_ab * gap_factor(a, b) > two_ab;
}

namespace {
std::string grid_str(GridRange r) {
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}
}  // namespace

ClaimReport check_eq89_grid(int n, GridRange a_range, GridRange b_range,
                            GridRange x_range) {
    if (n < 3) throw InvalidExponent("grid claim requires n >= 3");
    ClaimReport rep;
    rep.claim_id = "eq89_grid";
    rep.domain_tested = "n=" + std::to_string(n) + ", a in " +
                        grid_str(a_range) + ", b in " + grid_str(b_range) +
                        ", x in " + grid_str(x_range);
    Poly p_n = complete_power(n).p_poly;
    for (long a = a_range.lo; a <= a_range.hi; ++a) {
        for (long b = b_range.lo; b <= b_range.hi; ++b) {
            for (long x = x_range.lo; x <= x_range.hi; ++x) {
                BigInt av(a), bv(b), xv(x);
                BigInt c = av + bv + xv;
                BigInt num = av * bv * p_n.eval(c, av, bv);
                Rational q = make_rational(num, pow_big(xv, n - 2));
                if (!(q > Rational(2 * av * bv))) {
                    rep.counterexamples.push_back(
                        Witness{{"a", av}, {"b", bv}, {"x", xv}});
                }
            }
        }
    }
    rep.holds = rep.counterexamples.empty();
    rep.notes = "Q = a*b*P_n(C,a,b)/x^(n-2) compared against 2ab exactly; "
                "positive a, b only";
    return rep;
}

ClaimReport run_claim_common_core(const BigInt& m_max) {
    ClaimReport rep;
    rep.claim_id = "common_core";
    rep.domain_tested = "generated plus-branch triples for M in 1.." +
                        to_decimal(m_max);
    for (const auto& rec : enumerate_triples(m_max)) {
        if (!rec.triple) continue;
        BigInt core = rec.raw_c - (rec.params.a + rec.params.b);
        if (core != 2 * rec.params.m || core <= 0) {
            rep.counterexamples.push_back(Witness{{"M", rec.params.m},
                                                  {"a", rec.params.a},
                                                  {"b", rec.params.b}});
        }
    }
    rep.holds = rep.counterexamples.empty();
    rep.notes = "checks C - (a+b) = 2M > 0 on every valid generated triple";
    return rep;
}

ClaimReport run_claim_eq46() {
    ClaimReport rep;
    rep.claim_id = "eq46_chain";
    rep.domain_tested = "symbolic rational chain";
    RationalChain chain = derive_eq46_chain();
    bool ok = chain.s == make_rational(-4, 3) &&
              chain.coefficient == make_rational(1, 4);
    rep.holds = ok;
    rep.notes = "assumes [C-(a+b)]^2 = 2ab as the premise of the chain; "
                "that premise is recorded, not validated";
    return rep;
}

namespace {
ClaimReport run_pair_grid(const std::string& claim_id, GridRange a_range,
                          GridRange b_range,
                          bool (*check)(const BigInt&, const BigInt&)) {
    ClaimReport rep;
    rep.claim_id = claim_id;
    rep.domain_tested =
        "a in " + grid_str(a_range) + ", b in " + grid_str(b_range);
    for (long a = a_range.lo; a <= a_range.hi; ++a)
        for (long b = b_range.lo; b <= b_range.hi; ++b)
            if (!check(BigInt(a), BigInt(b)))
                rep.counterexamples.push_back(
                    Witness{{"a", BigInt(a)}, {"b", BigInt(b)}});
    rep.holds = rep.counterexamples.empty();
    rep.notes = "exact integer evaluation of both sides; positive a, b only";
    return rep;
}
}  // namespace

ClaimReport run_claim_eq63(GridRange a_range, GridRange b_range) {
    return run_pair_grid("eq63_grid", a_range, b_range, &check_eq63);
}

ClaimReport run_claim_eq87(GridRange a_range, GridRange b_range) {
    return run_pair_grid("eq87_grid", a_range, b_range, &check_eq87);
}

BigInt residual(int n, const BigInt& a, const BigInt& b, const BigInt& c) {
    if (n < 1) throw InvalidExponent("exponent must be >= 1");
    auto e = static_cast<unsigned long>(n);
    return pow_big(c, e) - pow_big(a, e) - pow_big(b, e);
}

namespace {
struct PartialSearch {
    std::vector<Triple> solutions;
    std::uint64_t candidates = 0;
};

// Scan hypotenuse values c in [c_lo, c_hi].
PartialSearch search_range(const std::vector<BigInt>& powers, long c_lo,
                           long c_hi) {
    PartialSearch part;
    for (long c = c_lo; c <= c_hi; ++c) {
        const BigInt& target = powers[static_cast<size_t>(c)];
        for (long a = 1; a < c; ++a) {
            const BigInt& pa = powers[static_cast<size_t>(a)];
            if (2 * pa > target) break;  // would force B < A
            ++part.candidates;
            BigInt rem = target - pa;
            auto begin = powers.begin() + a;  // B >= A
            auto end = powers.begin() + c;    // B < C
            auto it = std::lower_bound(begin, end, rem);
            if (it != end && *it == rem) {
                long b = it - powers.begin();
                part.solutions.push_back(
                    Triple{BigInt(a), BigInt(b), BigInt(c)});
            }
        }
    }
    return part;
}
}  // namespace

SearchReport search_solutions(int n, long bound, int jobs) {
    if (n < 2) throw InvalidExponent("exponent must be >= 2");
    if (bound < 2) throw InvalidParams("bound must be >= 2");
    if (jobs < 1) jobs = 1;

    std::vector<BigInt> powers(static_cast<size_t>(bound) + 1);
    for (long i = 0; i <= bound; ++i)
        powers[static_cast<size_t>(i)] =
            pow_big(BigInt(i), static_cast<unsigned long>(n));

    std::vector<PartialSearch> parts(static_cast<size_t>(jobs));
    if (jobs == 1) {
        parts[0] = search_range(powers, 2, bound);
    } else {
        std::vector<std::thread> workers;
        long span = bound - 1;  // c in [2, bound]
        for (int j = 0; j < jobs; ++j) {
            long lo = 2 + span * j / jobs;
            long hi = 2 + span * (j + 1) / jobs - 1;
            workers.emplace_back([&powers, &parts, j, lo, hi] {
                parts[static_cast<size_t>(j)] = search_range(powers, lo, hi);
            });
        }
        for (auto& w : workers) w.join();
    }

    SearchReport rep;
    rep.n = n;
    rep.bound = bound;
    for (const auto& part : parts) {
        rep.candidates_checked += part.candidates;
        rep.solutions.insert(rep.solutions.end(), part.solutions.begin(),
                             part.solutions.end());
    }
    std::sort(rep.solutions.begin(), rep.solutions.end(),
              [](const Triple& l, const Triple& r) {
                  if (l.hyp != r.hyp) return l.hyp < r.hyp;
                  return l.big_a < r.big_a;
              });
    return rep;
}

}  // namespace powsum
