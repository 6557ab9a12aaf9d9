#include "powsum/poly.hpp"

#include <sstream>

namespace powsum {

Poly::Poly(const BigInt& constant) {
    insert_term(Monomial{}, constant);
}

Poly::Poly(const BigInt& coeff, const Monomial& m) {
    insert_term(m, coeff);
}

Poly Poly::var_c() { return Poly(1, Monomial{1, 0, 0}); }
Poly Poly::var_a() { return Poly(1, Monomial{0, 1, 0}); }
Poly Poly::var_b() { return Poly(1, Monomial{0, 0, 1}); }

void Poly::insert_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int Poly::degree_c() const {
    int deg = -1;
    for (const auto& [m, c] : terms_)
        deg = std::max(deg, static_cast<int>(m.deg_c));
    return deg;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.insert_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.insert_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    Poly out;
    for (const auto& [ml, cl] : terms_)
        for (const auto& [mr, cr] : rhs.terms_)
            out.insert_term(Monomial{ml.deg_c + mr.deg_c, ml.deg_a + mr.deg_a,
                                     ml.deg_b + mr.deg_b},
                            cl * cr);
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly result(BigInt(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

BigInt Poly::eval(const BigInt& c_val, const BigInt& a_val,
                  const BigInt& b_val) const {
    BigInt sum = 0;
    for (const auto& [m, coeff] : terms_) {
        BigInt term = coeff;
        term *= pow_big(c_val, m.deg_c);
        term *= pow_big(a_val, m.deg_a);
        term *= pow_big(b_val, m.deg_b);
        sum += term;
    }
    return sum;
}

namespace {
Rational pow_rat(const Rational& base, unsigned exp) {
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}
}  // namespace

Rational Poly::eval(const Rational& c_val, const Rational& a_val,
                    const Rational& b_val) const {
    Rational sum(0);
    for (const auto& [m, coeff] : terms_) {
        Rational term(coeff);
        term *= pow_rat(c_val, m.deg_c);
        term *= pow_rat(a_val, m.deg_a);
        term *= pow_rat(b_val, m.deg_b);
        sum += term;
    }
    return sum;
}

Poly Poly::div_ab() const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        if (m.deg_a < 1 || m.deg_b < 1)
            throw NotDivisibleByAB("term lacks an a*b factor: " + str());
        out.terms_.emplace(Monomial{m.deg_c, m.deg_a - 1, m.deg_b - 1}, c);
    }
    return out;
}

Poly Poly::swap_ab() const {
    Poly out;
    for (const auto& [m, c] : terms_)
        out.insert_term(Monomial{m.deg_c, m.deg_b, m.deg_a}, c);
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        BigInt mag = abs(coeff);
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        bool constant = m.total_degree() == 0;
        bool wrote_coeff = false;
        if (mag != 1 || constant) {
            os << mag.get_str(10);
            wrote_coeff = true;
        }
        auto factor = [&](const char* name, unsigned deg) {
            if (deg == 0) return;
            if (wrote_coeff) os << "*";
            os << name;
            if (deg > 1) os << "^" << deg;
            wrote_coeff = true;
        };
        factor("C", m.deg_c);
        factor("a", m.deg_a);
        factor("b", m.deg_b);
    }
    return os.str();
}

}  // namespace powsum
