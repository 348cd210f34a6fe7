#include "qdilog/modular.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

BigComplex ModularPair::q_pow(long num, long den) const {
    return exp(log_q * BigReal(num, digits) / BigReal(den, digits));
}

BigComplex ModularPair::qt_pow(long num, long den) const {
    return exp(log_qt * BigReal(num, digits) / BigReal(den, digits));
}

ModularPair make_modular_pair(const BigComplex& b_in, int digits) {
    if (b_in.is_zero()) throw DomainError("modular pair: b = 0");
    BigComplex b = b_in;
    BigComplex b2 = b * b;
    if (!(b2.im().sign() > 0)) {
        throw DomainError("modular pair: Im(b^2) <= 0, outside the |q| < 1 regime");
    }
    const BigReal two_pi = BigReal::pi(digits) * 2;
    const BigComplex i = BigComplex::i(digits);
    ModularPair p{b, BigComplex(digits), BigComplex(digits), BigComplex(digits),
                  BigComplex(digits),    BigComplex(digits), BigComplex(digits), digits};
    p.b_inv = BigComplex(1, 0, digits) / b;
    p.log_q = i * b2 * two_pi;
    p.log_qt = -(i * (p.b_inv * p.b_inv) * two_pi);
    p.q = exp(p.log_q);
    p.qt = exp(p.log_qt);
    p.cb = i * (b + p.b_inv) / 2;
    return p;
}

BigComplex qpochhammer(const BigComplex& a, const BigComplex& q, long n) {
    const int d = a.digits10() < q.digits10() ? a.digits10() : q.digits10();
    BigComplex prod(1, 0, d);
    BigComplex aq = a;
    for (long k = 0; k < n; ++k) {
        prod *= (BigComplex(1, 0, d) - aq);
        aq *= q;
    }
    return prod;
}

QPochResult qpochhammer_inf_bounded(const BigComplex& a, const BigComplex& q) {
    const int d = a.digits10() < q.digits10() ? a.digits10() : q.digits10();
    const BigReal absq = abs(q);
    if (!(absq < BigReal(1, d))) {
        throw DomainError("(a;q)_inf requires |q| < 1");
    }
    const BigReal cutoff = BigReal::pow10(-(d + kGuardDigits), d);
    BigComplex prod(1, 0, d);
    BigComplex aq = a;
    long k = 0;
    BigReal mag = abs(aq);
    // |q| < 1 makes |a q^k| eventually monotone decreasing; iterate until it
    // falls below the cutoff (and at least one factor has been taken).
    const long hard_cap = 64 * (d + kGuardDigits) + 64;
    while (k == 0 || !(mag < cutoff)) {
        prod *= (BigComplex(1, 0, d) - aq);
        aq *= q;
        mag = abs(aq);
        if (++k > hard_cap) {
            throw ConvergenceError("(a;q)_inf: truncation cutoff not reached (|q| too close to 1)");
        }
    }
    // prod_{j>=k}(1-a q^j) departs from 1 by at most exp(S)-1 with
    // S = |a q^k|/(1-|q|); for S < 1/2 this is < 2S.
    BigReal tail = mag / (BigReal(1, d) - absq) * 2;
    return QPochResult{prod, tail, k};
}

BigComplex qpochhammer_inf(const BigComplex& a, const BigComplex& q) {
    return qpochhammer_inf_bounded(a, q).value;
}

BigComplex eta_ratio(const ModularPair& pair) {
    return qpochhammer_inf(pair.q, pair.q) / qpochhammer_inf(pair.qt, pair.qt);
}

BigReal check_eta_modular(const ModularPair& pair) {
    const int d = pair.digits;
    BigComplex lhs = eta_ratio(pair);
    BigReal pi4 = BigReal::pi(d) / 4;
    BigComplex phase = exp(BigComplex(BigReal(0, d), pi4));
    BigComplex root = exp((pair.log_qt - pair.log_q) / 24);
    BigComplex rhs = phase * root * pair.b_inv;
    return abs(lhs - rhs);
}

}  // namespace qdilog
