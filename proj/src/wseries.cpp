#include "qdilog/wseries.hpp"

#include <algorithm>
#include <set>

#include "qdilog/errors.hpp"

namespace qdilog {

LaurentSeriesW::LaurentSeriesW(int pole_order, int trunc_order)
    : pole_order_(pole_order), trunc_order_(trunc_order) {
    if (trunc_order_ < -pole_order_) throw DomainError("LaurentSeriesW: empty power range");
    coeffs_.resize(static_cast<std::size_t>(trunc_order_ + pole_order_ + 1));
}

LaurentSeriesW LaurentSeriesW::constant(const OperatorPolynomial& c, int trunc_order) {
    LaurentSeriesW s(0, trunc_order);
    s.set_coeff(0, c);
    return s;
}

const OperatorPolynomial& LaurentSeriesW::coeff(int power) const {
    static const OperatorPolynomial zero;
    if (power < -pole_order_ || power > trunc_order_) return zero;
    return coeffs_[static_cast<std::size_t>(power + pole_order_)];
}

void LaurentSeriesW::set_coeff(int power, OperatorPolynomial c) {
    if (power < -pole_order_ || power > trunc_order_) {
        throw DomainError("LaurentSeriesW: coefficient outside tracked range");
    }
    coeffs_[static_cast<std::size_t>(power + pole_order_)] = std::move(c);
}

void LaurentSeriesW::normalize() {
    while (pole_order_ > 0 && coeffs_.front().is_zero()) {
        coeffs_.erase(coeffs_.begin());
        --pole_order_;
    }
}

LaurentSeriesW& LaurentSeriesW::operator+=(const LaurentSeriesW& rhs) {
    int pole = std::max(pole_order_, rhs.pole_order_);
    int trunc = std::min(trunc_order_, rhs.trunc_order_);
    LaurentSeriesW out(pole, trunc);
    for (int k = -pole; k <= trunc; ++k) {
        OperatorPolynomial c = coeff(k);
        c += rhs.coeff(k);
        out.set_coeff(k, std::move(c));
    }
    *this = std::move(out);
    return *this;
}

LaurentSeriesW LaurentSeriesW::operator*(const LaurentSeriesW& rhs) const {
    int pole = pole_order_ + rhs.pole_order_;
    int trunc = std::min(trunc_order_ - rhs.pole_order_, rhs.trunc_order_ - pole_order_);
    if (trunc < -pole) throw DomainError("LaurentSeriesW: product truncation underflow");
    LaurentSeriesW out(pole, trunc);
    for (int i = -pole_order_; i <= trunc_order_; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = -rhs.pole_order_; j <= rhs.trunc_order_; ++j) {
            int k = i + j;
            if (k < -pole || k > trunc) continue;
            if (rhs.coeff(j).is_zero()) continue;
            OperatorPolynomial c = out.coeff(k);
            c += coeff(i) * rhs.coeff(j);
            out.set_coeff(k, std::move(c));
        }
    }
    return out;
}

LaurentSeriesW& LaurentSeriesW::operator*=(const OperatorPolynomial& c) {
    for (auto& p : coeffs_) p = p * c;
    return *this;
}

LaurentSeriesW LaurentSeriesW::shifted(int k) const {
    LaurentSeriesW out(pole_order_ - k, trunc_order_ + k);
    for (int p = -pole_order_; p <= trunc_order_; ++p) out.set_coeff(p + k, coeff(p));
    return out;
}

LaurentSeriesW LaurentSeriesW::pow(unsigned e) const {
    LaurentSeriesW acc = constant(OperatorPolynomial(1), trunc_order_);
    LaurentSeriesW base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

LaurentSeriesW LaurentSeriesW::exp_series() const {
    LaurentSeriesW arg(*this);
    arg.normalize();
    if (arg.pole_order() > 0) throw DomainError("exp of a series with a pole");
    if (!arg.coeff(0).is_zero()) throw DomainError("exp of a series with a nonzero constant term");
    // exp(s) = sum_{k<=N} s^k / k!; s has valuation >= 1, so the sum is exact
    // to the truncation order.
    LaurentSeriesW acc = constant(OperatorPolynomial(1), trunc_order_);
    LaurentSeriesW term = constant(OperatorPolynomial(1), trunc_order_);
    Rational kfac(1);
    for (int k = 1; k <= trunc_order_; ++k) {
        term = term * arg;
        kfac *= k;
        LaurentSeriesW scaled = term;
        scaled *= OperatorPolynomial(Rational(1) / kfac);
        acc += scaled;
    }
    return acc;
}

LaurentSeriesW LaurentSeriesW::inverse() const {
    LaurentSeriesW u(*this);
    u.normalize();
    if (u.pole_order() > 0) throw DomainError("inverse: series has a pole part");
    const OperatorPolynomial& c0 = u.coeff(0);
    if (c0.term_count() != 1 || !c0.terms().begin()->first.is_one()) {
        throw DomainError("inverse: constant coefficient must be a nonzero rational");
    }
    Rational u0 = c0.terms().begin()->second;
    LaurentSeriesW out(0, trunc_order_);
    out.set_coeff(0, OperatorPolynomial(Rational(1) / u0));
    for (int k = 1; k <= trunc_order_; ++k) {
        OperatorPolynomial acc;
        for (int j = 1; j <= k; ++j) {
            acc += u.coeff(j) * out.coeff(k - j);
        }
        acc *= Rational(-1) / u0;
        out.set_coeff(k, std::move(acc));
    }
    return out;
}

OperatorPolynomial LaurentSeriesW::residue() const { return coeff(-1); }

LaurentSeriesW one_minus_exp_inverse(long B, int order) {
    if (B < 1) throw DomainError("one_minus_exp_inverse: B must be positive");
    if (order < B) throw DomainError("one_minus_exp_inverse: order must be >= B");
    // b (1 - e^{w/b}) = -w (1 + u), u = sum_{k>=1} b^{-k} w^k / (k+1)!.
    int n = order;
    LaurentSeriesW u(0, n);
    Rational fac(1);  // (k+1)!
    for (int k = 1; k <= n; ++k) {
        fac *= (k + 1);
        u.set_coeff(k, OperatorPolynomial::gen(gen_b(), -k) * (Rational(1) / fac));
    }
    LaurentSeriesW one_plus_u = LaurentSeriesW::constant(OperatorPolynomial(1), n) + u;
    LaurentSeriesW v = one_plus_u.inverse().pow(static_cast<unsigned>(B));
    if (B % 2 == 1) v *= OperatorPolynomial(-1);
    return v.shifted(-static_cast<int>(B));
}

LaurentSeriesW phi_delta_series(int order) {
    LaurentSeriesW s(0, order);
    Rational fac(1);
    for (int l = 1; l <= order; ++l) {
        fac *= l;
        s.set_coeff(l, OperatorPolynomial::gen(gen_delta_l(l)) * (Rational(-1) / fac));
    }
    return s.exp_series();
}

LaurentSeriesW phitilde_delta_series(int order) {
    LaurentSeriesW s(0, order);
    // -deltat w  +  2 sum_{even l} e_l w^l / l!  -  sum_l deltat_l (-w)^l / l!
    OperatorPolynomial lin = -OperatorPolynomial::gen(gen_deltat());
    lin += OperatorPolynomial::gen(gen_deltat_l(1));  // -(-w)^1 term
    s.set_coeff(1, lin);
    Rational fac(1);
    for (int l = 2; l <= order; ++l) {
        fac *= l;
        OperatorPolynomial c;
        Rational sign = (l % 2 == 0) ? Rational(-1) : Rational(1);
        c += OperatorPolynomial::gen(gen_deltat_l(l)) * (sign / fac);
        if (l % 2 == 0) {
            c += OperatorPolynomial::gen(gen_e(l)) * (Rational(2) / fac);
        }
        s.set_coeff(l, std::move(c));
    }
    return s.exp_series();
}

namespace {

// Substitutes w -> b^k w: the coefficient of w^l picks up b^{k*l}.
LaurentSeriesW scale_by_b_power(const LaurentSeriesW& s, int k) {
    LaurentSeriesW out(s.pole_order(), s.trunc_order());
    for (int l = -s.pole_order(); l <= s.trunc_order(); ++l) {
        if (s.coeff(l).is_zero()) continue;
        out.set_coeff(l, s.coeff(l) * OperatorPolynomial::gen(gen_b(), k * l));
    }
    return out;
}

}  // namespace

OperatorPolynomial compute_pab(long A, long B) {
    if (!(B > A && A > 0)) throw DomainError("compute_pab: need B > A > 0");
    const int order = static_cast<int>(B);  // numerator orders 0..B suffice for the residue

    // Gaussian-linear exponential: (A/2) pihat w^2 + A (b(delta+1/2) + (deltat+1/2)/b) w.
    LaurentSeriesW expo(0, order);
    OperatorPolynomial half(Rational(1, 2));
    OperatorPolynomial lin =
        OperatorPolynomial::gen(gen_b()) * (OperatorPolynomial::gen(gen_delta()) + half) +
        OperatorPolynomial::gen(gen_b(), -1) * (OperatorPolynomial::gen(gen_deltat()) + half);
    lin *= Rational(A);
    expo.set_coeff(1, std::move(lin));
    expo.set_coeff(2, OperatorPolynomial::gen(gen_pihat()) * Rational(A, 2));
    LaurentSeriesW gauss = expo.exp_series();

    LaurentSeriesW phi_b_w = scale_by_b_power(phi_delta_series(order), 1);
    LaurentSeriesW phit_binv_w = scale_by_b_power(phitilde_delta_series(order), -1);
    LaurentSeriesW denom = one_minus_exp_inverse(B, order + static_cast<int>(B));

    LaurentSeriesW num = gauss * phi_b_w.pow(static_cast<unsigned>(B)) *
                         phit_binv_w.pow(static_cast<unsigned>(B));
    return (num * denom).residue();
}

bool pab_symmetry_check(long A, long B) {
    return compute_pab(A, B) == compute_pab(B - A, B);
}

PabDegrees pab_degrees(const OperatorPolynomial& p) {
    PabDegrees out{0, {}};
    std::set<int> bexp;
    for (const auto& [m, c] : p.terms()) {
        int edeg = 0;
        int be = 0;
        for (const auto& [g, e] : m.factors) {
            if (gen_kind(g) == GenKind::E) edeg += static_cast<int>(gen_index(g)) * e;
            if (gen_kind(g) == GenKind::B) be = e;
        }
        out.e_weighted_degree = std::max(out.e_weighted_degree, edeg);
        bexp.insert(be);
    }
    out.b_exponents.assign(bexp.begin(), bexp.end());
    return out;
}

}  // namespace qdilog
