#include "qdilog/nahm.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {

// element of Q[z]/(z^B - sigma)
struct Elt {
    std::vector<Rational> c;  // size B

    static Elt zero(long B) { return Elt{std::vector<Rational>(static_cast<std::size_t>(B))}; }
    static Elt one(long B) {
        Elt e = zero(B);
        e.c[0] = 1;
        return e;
    }
    static Elt z(long B) {
        Elt e = zero(B);
        if (B == 1) {
            e.c[0] = 1;  // z = sigma itself when B = 1 (degenerate, unused: B >= 2)
        } else {
            e.c[1] = 1;
        }
        return e;
    }
    bool is_zero() const {
        for (const auto& x : c) {
            if (x != 0) return false;
        }
        return true;
    }
};

Elt add(const Elt& a, const Elt& b) {
    Elt out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

Elt sub(const Elt& a, const Elt& b) {
    Elt out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

Elt mul(const Elt& a, const Elt& b, int sigma) {
    const std::size_t B = a.c.size();
    Elt out = Elt::zero(static_cast<long>(B));
    for (std::size_t i = 0; i < B; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < B; ++j) {
            if (b.c[j] == 0) continue;
            Rational p = a.c[i] * b.c[j];
            std::size_t k = i + j;
            if (k >= B) {
                k -= B;
                if (sigma < 0) p = -p;
            }
            out.c[k] += p;
        }
    }
    return out;
}

Elt scale(const Elt& a, const Rational& r) {
    Elt out = a;
    for (auto& x : out.c) x *= r;
    return out;
}

using EltSeries = std::vector<Elt>;  // index = power of u

EltSeries series_mul(const EltSeries& a, const EltSeries& b, std::size_t order, long B,
                     int sigma) {
    EltSeries out(order + 1, Elt::zero(B));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] = add(out[i + j], mul(a[i], b[j], sigma));
        }
    }
    return out;
}

EltSeries series_pow(const EltSeries& a, long e, std::size_t order, long B, int sigma) {
    EltSeries acc(order + 1, Elt::zero(B));
    acc[0] = Elt::one(B);
    EltSeries base = a;
    while (e > 0) {
        if (e & 1l) acc = series_mul(acc, base, order, B, sigma);
        e >>= 1;
        if (e > 0) base = series_mul(base, base, order, B, sigma);
    }
    return acc;
}

}  // namespace

NahmReport nahm_puiseux(long A, long B, std::size_t order, int digits) {
    if (!(B > A && A > 0)) throw DomainError("nahm_puiseux: need B > A > 0");
    if (order < 1) throw DomainError("nahm_puiseux: order must be >= 1");
    const int sigma = ((A + B) % 2 == 0) ? 1 : -1;

    // psi = sum_{k>=1} c_k u^k with c_1 = z; the equation forces omega(0) = 1,
    // i.e. psi(0) = 0, in every branch.
    const std::size_t top = order + static_cast<std::size_t>(B);
    EltSeries psi(top + 1, Elt::zero(B));
    psi[1] = Elt::z(B);

    // inverse of B c_1^{B-1}: c_1^{-1} = sigma z, so (B z^{B-1})^{-1} = sigma z / B
    Elt inv_lead = scale(mul(Elt::z(B), Elt::one(B), sigma), Rational(sigma, B));
    // that is (sigma/B) z; multiply by it after forming the defect

    for (std::size_t k = 1; k < order; ++k) {
        // defect at u^{B+k}: sigma [u^k](1+psi)^A - [u^{B+k}] psi^B
        EltSeries one_plus = psi;
        one_plus[0] = add(one_plus[0], Elt::one(B));
        EltSeries rhs = series_pow(one_plus, A, k, B, sigma);
        EltSeries lhs = series_pow(psi, B, static_cast<std::size_t>(B) + k, B, sigma);
        Elt defect = sub(scale(rhs[k], Rational(sigma)), lhs[static_cast<std::size_t>(B) + k]);
        psi[k + 1] = mul(defect, inv_lead, sigma);
    }

    // exact verification: (-psi)^B - sigma u^B (1+psi)^A = 0 through u^{B+order-1}
    EltSeries lhs = series_pow(psi, B, top, B, sigma);
    if (B % 2 == 1) {
        for (auto& e : lhs) e = scale(e, Rational(-1));
    }
    EltSeries one_plus = psi;
    one_plus[0] = add(one_plus[0], Elt::one(B));
    EltSeries rhs = series_pow(one_plus, A, top, B, sigma);
    bool ok = true;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(B) + order - 1; ++k) {
        Elt r = (k >= static_cast<std::size_t>(B)) ? rhs[k - static_cast<std::size_t>(B)]
                                                   : Elt::zero(B);
        // (1-omega)^B = (-psi)^B = (-1)^B psi^B; equation: (-1)^B psi^B = (-1)^A u^B (1+psi)^A,
        // i.e. lhs_k (already carrying (-1)^B) minus (-1)^A r must vanish
        Elt rr = (A % 2 == 1) ? scale(r, Rational(-1)) : r;
        if (!sub(lhs[k], rr).is_zero()) {
            ok = false;
            break;
        }
    }

    NahmReport report;
    report.A = A;
    report.B = B;
    report.sigma = sigma;
    report.order = order;
    report.residual_zero = ok;
    for (std::size_t k = 1; k <= order; ++k) report.symbolic.push_back(psi[k].c);

    // numeric embeddings z -> each B-th root of sigma
    const BigReal pi = BigReal::pi(digits);
    for (long j = 0; j < B; ++j) {
        BigReal angle = sigma > 0 ? pi * (2 * j) / B : pi * (2 * j + 1) / B;
        BigComplex root = exp(BigComplex(BigReal(0, digits), angle));
        std::vector<BigComplex> branch;
        for (std::size_t k = 1; k <= order; ++k) {
            BigComplex val(0, 0, digits);
            BigComplex zp(1, 0, digits);
            for (std::size_t r = 0; r < psi[k].c.size(); ++r) {
                if (psi[k].c[r] != 0) {
                    val += zp * to_bigreal(psi[k].c[r], digits);
                }
                zp *= root;
            }
            branch.push_back(val);
        }
        report.branches.push_back(std::move(branch));
    }
    return report;
}

}  // namespace qdilog
