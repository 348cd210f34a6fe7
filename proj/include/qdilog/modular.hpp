#pragma once

#include "qdilog/bigfloat.hpp"

namespace qdilog {

// The modular triple (b, q, qt) with q = exp(2*pi*i*b^2), qt = exp(-2*pi*i/b^2)
// and c_b = (i/2)(b + 1/b), valid for Im(b^2) > 0 so that |q| < 1 and |qt| < 1.
//
// log_q and log_qt hold the defining exponents 2*pi*i*b^2 and -2*pi*i/b^2.
// Every fractional power of q or qt in this library is exp(r * log_q) or
// exp(r * log_qt); a principal log of the computed q is never taken, which
// pins all 24th/8th-root branches.
struct ModularPair {
    BigComplex b;
    BigComplex b_inv;
    BigComplex q;
    BigComplex qt;
    BigComplex cb;
    BigComplex log_q;
    BigComplex log_qt;
    int digits;

    // q^(num/den) via the exponent convention above.
    BigComplex q_pow(long num, long den) const;
    BigComplex qt_pow(long num, long den) const;
};

// Builds the modular pair at the requested precision. Rejects b = 0 and
// Im(b^2) <= 0 (outside the factorization regime).
ModularPair make_modular_pair(const BigComplex& b, int digits);

// Finite q-Pochhammer symbol (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k).
BigComplex qpochhammer(const BigComplex& a, const BigComplex& q, long n);

struct QPochResult {
    BigComplex value;
    BigReal tail_bound;  // bound on the relative truncation error
    long factors;
};

// Infinite symbol (a;q)_inf for |q| < 1, truncated once |a q^k| drops below
// 10^-(p+g); the geometric tail bound is reported alongside the value.
QPochResult qpochhammer_inf_bounded(const BigComplex& a, const BigComplex& q);
BigComplex qpochhammer_inf(const BigComplex& a, const BigComplex& q);

// (q;q)_inf / (qt;qt)_inf.
BigComplex eta_ratio(const ModularPair& pair);

// Residual |eta_ratio - e^(pi i/4) (qt/q)^(1/24) / b| of the modular relation,
// with the 24th roots taken by the exponent convention.
BigReal check_eta_modular(const ModularPair& pair);

}  // namespace qdilog
