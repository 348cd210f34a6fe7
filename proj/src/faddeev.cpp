#include "qdilog/faddeev.hpp"

#include <algorithm>
#include <string>

#include "qdilog/errors.hpp"

namespace qdilog {

BigComplex pole_location(const PoleIndex& idx, const ModularPair& pair) {
    const BigComplex i = BigComplex::i(pair.digits);
    return pair.cb + i * pair.b * idx.m + i * pair.b_inv * idx.n;
}

std::pair<PoleIndex, BigReal> nearest_pole(const BigComplex& x, const ModularPair& pair) {
    const int d = pair.digits;
    // Window size: |x - c_b| steps of the shorter lattice vector, plus slack.
    BigReal r = abs(x - pair.cb);
    BigReal step = min(abs(pair.b), abs(pair.b_inv));
    long w = r.to_double() / step.to_double() + 3;
    w = std::clamp(w, 3l, 512l);

    const BigComplex i = BigComplex::i(d);
    const BigComplex ib = i * pair.b;
    const BigComplex ibi = i * pair.b_inv;
    PoleIndex best;
    BigReal best_dist = abs(x - pair.cb);
    BigComplex row = pair.cb;
    for (long m = 0; m <= w; ++m) {
        BigComplex p = row;
        for (long n = 0; n <= w; ++n) {
            BigReal dist = abs(x - p);
            if (dist < best_dist) {
                best = PoleIndex{m, n};
                best_dist = dist;
            }
            p += ibi;
        }
        row += ib;
    }
    return {best, best_dist};
}

BigReal default_pole_radius(const ModularPair& pair) {
    return abs(pair.b) / 1000;
}

BigComplex phi_b_unchecked(const BigComplex& x, const ModularPair& pair) {
    const int d = pair.digits;
    const BigReal two_pi = BigReal::pi(d) * 2;
    BigComplex num_arg = exp((x + pair.cb) * pair.b * two_pi);
    BigComplex den_arg = exp((x - pair.cb) * pair.b_inv * two_pi);
    return qpochhammer_inf(num_arg, pair.q) / qpochhammer_inf(den_arg, pair.qt);
}

BigComplex phi_b(const BigComplex& x, const ModularPair& pair, const BigReal& exclusion_radius) {
    auto [idx, dist] = nearest_pole(x, pair);
    if (!(dist > exclusion_radius)) {
        throw PoleProximityError(idx.m, idx.n,
                                 "phi_b: x within exclusion radius of pole (m,n)=(" +
                                     std::to_string(idx.m) + "," + std::to_string(idx.n) + ")");
    }
    return phi_b_unchecked(x, pair);
}

BigComplex phi_b(const BigComplex& x, const ModularPair& pair) {
    return phi_b(x, pair, default_pole_radius(pair));
}

BigComplex phi_b_zero_closed_form(const ModularPair& pair) {
    // Phi_b(0)^2 = q^{1/24} qt^{-1/24} is the inversion constant; the value
    // itself is the exponent-convention square root of that.
    return exp((pair.log_q - pair.log_qt) / 48);
}

std::pair<BigReal, BigReal> shift_check(const BigComplex& x, const ModularPair& pair) {
    const int d = pair.digits;
    const BigReal two_pi = BigReal::pi(d) * 2;
    const BigComplex i = BigComplex::i(d);
    const BigComplex one(1, 0, d);

    BigComplex base = phi_b(x + pair.cb, pair);
    BigComplex lhs_b = phi_b(x + pair.cb + i * pair.b, pair) / base;
    BigComplex rhs_b = one / (one - pair.q * exp(x * pair.b * two_pi));

    BigComplex lhs_bi = phi_b(x + pair.cb + i * pair.b_inv, pair) / base;
    BigComplex rhs_bi = one / (one - exp(x * pair.b_inv * two_pi) / pair.qt);

    return {rel_diff(lhs_b, rhs_b), rel_diff(lhs_bi, rhs_bi)};
}

}  // namespace qdilog
