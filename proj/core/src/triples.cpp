#include "powsum/triples.hpp"

#include <algorithm>
#include <set>

#include "powsum/errors.hpp"

namespace powsum {

std::vector<std::pair<BigInt, BigInt>> factor_pairs(const BigInt& m) {
    BigInt product = 2 * m * m;
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (BigInt a = 1; a * a < product; ++a) {
        if (product % a == 0) pairs.emplace_back(a, product / a);
    }
    // a*a == product cannot happen: 2*m^2 is never a perfect square for m >= 1.
    return pairs;
}

GenerationRecord generate(const TripleParams& params) {
    if (params.a * params.b != 2 * params.m * params.m)
        throw InvalidParams("a*b must equal 2*M^2");
    GenerationRecord rec;
    rec.params = params;
    BigInt two_m = 2 * params.m;
    rec.raw_c = params.a + params.b +
                (params.branch == Branch::plus ? two_m : -two_m);
    rec.raw_a = rec.raw_c - params.a;
    rec.raw_b = rec.raw_c - params.b;
    if (rec.raw_a > 0 && rec.raw_b > 0) {
        Triple t{rec.raw_a, rec.raw_b, rec.raw_c};
        if (t.big_a * t.big_a + t.big_b * t.big_b != t.hyp * t.hyp)
            throw InvalidParams("generated legs fail the square check");
        rec.triple = t;
    } else {
        rec.degenerate_reason = "non-positive leg";
    }
    return rec;
}

std::vector<GenerationRecord> enumerate_triples(const BigInt& m_max) {
    std::vector<GenerationRecord> out;
    for (BigInt m = 1; m <= m_max; ++m) {
        for (const auto& [a, b] : factor_pairs(m)) {
            out.push_back(generate({m, a, b, Branch::plus}));
            out.push_back(generate({m, a, b, Branch::minus}));
        }
    }
    return out;
}

TripleParams recover_params(const Triple& t) {
    if (t.big_a * t.big_a + t.big_b * t.big_b != t.hyp * t.hyp)
        throw NotATriple("A^2 + B^2 != C^2");
    BigInt a = t.hyp - t.big_a;
    BigInt b = t.hyp - t.big_b;
    BigInt ab = a * b;
    if (ab % 2 != 0) throw NotRepresentable("a*b is odd");
    auto [root, exact] = sqrt_exact(ab / 2);
    if (!exact) throw NotRepresentable("a*b/2 is not a perfect square");
    return TripleParams{root, a, b, Branch::plus};
}

std::vector<Triple> euclid_oracle(const BigInt& c_max) {
    std::set<Triple> found;
    for (BigInt m = 2; m * m + 1 <= c_max; ++m) {
        for (BigInt n = 1; n < m; ++n) {
            if (gcd(m, n) != 1) continue;
            if ((m - n) % 2 == 0) continue;  // same parity gives non-primitive
            BigInt leg1 = m * m - n * n;
            BigInt leg2 = 2 * m * n;
            BigInt hyp = m * m + n * n;
            for (BigInt k = 1; k * hyp <= c_max; ++k) {
                BigInt x = k * leg1, y = k * leg2;
                if (x < y) std::swap(x, y);
                found.insert(Triple{x, y, k * hyp});
            }
        }
    }
    std::vector<Triple> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Triple& l, const Triple& r) {
        if (l.hyp != r.hyp) return l.hyp < r.hyp;
        if (l.big_a != r.big_a) return l.big_a < r.big_a;
        return l.big_b < r.big_b;
    });
    return out;
}

bool is_primitive(const Triple& t) {
    return gcd(gcd(t.big_a, t.big_b), t.hyp) == 1;
}

}  // namespace powsum
