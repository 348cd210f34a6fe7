#include "qdilog/ring.hpp"

#include <algorithm>

#include "qdilog/errors.hpp"

namespace qdilog {

BigReal to_bigreal(const Rational& r, int digits) {
    BigReal out(digits);
    mpfr_set_q(out.raw(), r.backend().data(), MPFR_RNDN);
    return out;
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw DomainError("rational_pow: 0 to a negative power");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) acc *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return acc;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer num(1), den(1);
    if (k > n - k) k = n - k;
    for (long j = 1; j <= k; ++j) {
        num *= (n - k + j);
        den *= j;
    }
    return num / den;
}

std::string gen_name(GenId g) {
    switch (gen_kind(g)) {
        case GenKind::Delta:
            return "delta";
        case GenKind::DeltaL:
            return "delta_" + std::to_string(gen_index(g));
        case GenKind::DeltaT:
            return "deltat";
        case GenKind::DeltaTL:
            return "deltat_" + std::to_string(gen_index(g));
        case GenKind::B:
            return "b";
        case GenKind::PiHat:
            return "pihat";
        case GenKind::E:
            return "e_" + std::to_string(gen_index(g));
    }
    return "?";
}

Monomial Monomial::gen(GenId g, int e) {
    Monomial m;
    if (e != 0) m.factors.emplace_back(g, e);
    return m;
}

int Monomial::exponent(GenId g) const {
    for (const auto& [id, e] : factors) {
        if (id == g) return e;
    }
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors.reserve(factors.size() + other.factors.size());
    auto a = factors.begin();
    auto b = other.factors.begin();
    while (a != factors.end() || b != other.factors.end()) {
        if (b == other.factors.end() || (a != factors.end() && a->first < b->first)) {
            out.factors.push_back(*a++);
        } else if (a == factors.end() || b->first < a->first) {
            out.factors.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

OperatorPolynomial::OperatorPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

OperatorPolynomial::OperatorPolynomial(long c) {
    if (c != 0) terms_.emplace(Monomial::one(), Rational(c));
}

OperatorPolynomial OperatorPolynomial::gen(GenId g, int e) {
    if (e != 0 && e < 0 && gen_kind(g) != GenKind::B) {
        throw DomainError("only b admits negative exponents");
    }
    OperatorPolynomial p;
    p.terms_.emplace(Monomial::gen(g, e), Rational(1));
    return p;
}

Rational OperatorPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OperatorPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OperatorPolynomial OperatorPolynomial::operator-() const {
    OperatorPolynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

OperatorPolynomial& OperatorPolynomial::operator+=(const OperatorPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(const OperatorPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

OperatorPolynomial OperatorPolynomial::operator*(const OperatorPolynomial& rhs) const {
    OperatorPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

OperatorPolynomial& OperatorPolynomial::operator*=(const OperatorPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

OperatorPolynomial& OperatorPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

OperatorPolynomial OperatorPolynomial::pow(unsigned e) const {
    OperatorPolynomial acc(1);
    OperatorPolynomial base(*this);
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

OperatorPolynomial OperatorPolynomial::substitute(GenId g, const OperatorPolynomial& value) const {
    OperatorPolynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(g);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest;
        for (const auto& f : m.factors) {
            if (f.first != g) rest.factors.push_back(f);
        }
        if (e < 0) {
            // only meaningful when the replacement is an invertible scalar
            if (value.term_count() != 1 || !value.terms().begin()->first.is_one() ||
                value.terms().begin()->second == 0) {
                throw DomainError(
                    "substitute: negative exponent needs a nonzero rational replacement");
            }
            Rational r = rational_pow(value.terms().begin()->second, e);
            out.add_term(rest, c * r);
            continue;
        }
        OperatorPolynomial repl = value.pow(static_cast<unsigned>(e));
        for (const auto& [mr, cr] : repl.terms_) {
            out.add_term(rest.times(mr), c * cr);
        }
    }
    return out;
}

OperatorPolynomial OperatorPolynomial::swap_tilde() const {
    auto swap_gen = [](GenId g) -> GenId {
        switch (gen_kind(g)) {
            case GenKind::Delta:
                return gen_deltat();
            case GenKind::DeltaL:
                return gen_deltat_l(gen_index(g));
            case GenKind::DeltaT:
                return gen_delta();
            case GenKind::DeltaTL:
                return gen_delta_l(gen_index(g));
            default:
                return g;
        }
    };
    OperatorPolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial sm;
        for (const auto& [g, e] : m.factors) sm.factors.emplace_back(swap_gen(g), e);
        std::sort(sm.factors.begin(), sm.factors.end());
        out.add_term(sm, c);
    }
    return out;
}

std::string OperatorPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string coef = mag.str();
        bool need_coef = m.is_one() || mag != 1;
        if (need_coef) out += coef;
        bool need_star = need_coef && !m.is_one();
        for (const auto& [g, e] : m.factors) {
            if (need_star) out += "*";
            need_star = true;
            out += gen_name(g);
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qdilog
