#include "qdilog/qseries.hpp"

#include <cmath>

#include "qdilog/errors.hpp"

namespace qdilog {

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::size_t order, int digits) {
    Coeffs out(order + 1, BigComplex(0, 0, digits));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Coeffs poly_exp(const Coeffs& a, std::size_t order, int digits) {
    if (!a.empty() && !a[0].is_zero()) {
        throw DomainError("poly_exp: nonzero constant term");
    }
    // E' = A' E  =>  k E_k = sum_{j=1}^k j a_j E_{k-j}
    Coeffs out(order + 1, BigComplex(0, 0, digits));
    out[0] = BigComplex(1, 0, digits);
    for (std::size_t k = 1; k <= order; ++k) {
        BigComplex acc(0, 0, digits);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
            acc += a[j] * out[k - j] * static_cast<long>(j);
        }
        out[k] = acc / static_cast<long>(k);
    }
    return out;
}

Coeffs poly_inv(const Coeffs& a, std::size_t order, int digits) {
    if (a.empty() || a[0].is_zero()) {
        throw DomainError("poly_inv: zero constant term");
    }
    Coeffs out(order + 1, BigComplex(0, 0, digits));
    BigComplex one(1, 0, digits);
    out[0] = one / a[0];
    for (std::size_t k = 1; k <= order; ++k) {
        BigComplex acc(0, 0, digits);
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
            acc += a[j] * out[k - j];
        }
        out[k] = -(acc / a[0]);
    }
    return out;
}

namespace {

long series_cap(int digits) { return 600 + 40L * digits; }

long ipow_l(long base, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

BigComplex e_series(long l, long m, const BigComplex& q, const BigReal& tol) {
    if (l < 1 || m < 0) throw DomainError("e_series: need l >= 1 and m >= 0");
    const int d = q.digits10();
    const BigReal absq = abs(q);
    if (!(absq < BigReal(1, d))) throw DomainError("e_series: |q| < 1 required");
    const BigComplex one(1, 0, d);
    const BigComplex w = pow_int(q, m + 1);
    const BigReal absw = abs(w);
    const BigReal inv_gap = BigReal(1, d) / (BigReal(1, d) - absq);

    BigComplex acc(0, 0, d);
    BigComplex ws = w;   // w^s
    BigComplex qs = q;   // q^s
    const long cap = series_cap(d);
    for (long s = 1;; ++s) {
        BigComplex term = ws / (one - qs);
        if (l > 1) term *= ipow_l(s, l - 1);
        acc += term;
        // geometric tail certificate: once the growth ratio rho is below 0.9,
        // remaining terms are bounded by bound * rho / (1 - rho)
        BigReal bound = abs(ws) * inv_gap;
        if (l > 1) bound *= ipow_l(s + 1, l - 1);
        // per-step growth of s'^{l-1} |w|^{s'} beyond s is at most rho
        BigReal rho = absw * BigReal::from_double(std::pow((s + 1.0) / s, l - 1.0), d);
        if (s >= l + 2 && rho < BigReal::from_double(0.9, d)) {
            BigReal tail = bound * rho / (BigReal(1, d) - rho);
            if (tail < tol) break;
        }
        if (s > cap) throw ConvergenceError("e_series: tail not certified within term budget");
        ws *= w;
        qs *= q;
    }
    return acc;
}

BigComplex e_lr_series(long l, long r, long m, const BigComplex& q, const BigReal& tol) {
    if (l < 1 || r < 1 || l < r || m < 0) {
        throw DomainError("e_lr_series: need l >= r >= 1 and m >= 0");
    }
    const int d = q.digits10();
    const BigReal absq = abs(q);
    if (!(absq < BigReal(1, d))) throw DomainError("e_lr_series: |q| < 1 required");
    const BigComplex one(1, 0, d);
    const BigReal gap_l = pow_int(BigReal(1, d) - absq, l);
    const BigReal rho = pow_int(absq, r);

    BigComplex acc(0, 0, d);
    BigComplex qk = pow_int(q, m + 1);
    BigComplex qkr = pow_int(qk, r);
    const BigComplex qr = pow_int(q, r);
    const long cap = series_cap(d);
    for (long k = m + 1;; ++k) {
        acc += qkr / pow_int(one - qk, l);
        BigReal bound = abs(qkr) / gap_l;
        BigReal tail = bound * rho / (BigReal(1, d) - rho);
        if (tail < tol) break;
        if (k - m > cap) throw ConvergenceError("e_lr_series: tail not certified");
        qk *= q;
        qkr *= qr;
    }
    return acc;
}

BigComplex e_tilde(long l, long n, const BigComplex& qt, const BigReal& tol) {
    if (l == 1) {
        return BigComplex(-n, 0, qt.digits10()) + e_series(1, n, qt, tol);
    }
    if (l % 2 == 1) {
        return e_series(l, n, qt, tol);
    }
    return e_series(l, 0, qt, tol) * 2 - e_series(l, n, qt, tol);
}

BigComplex e_bracket(long l, long r, long n, const BigComplex& q) {
    if (l < 1 || r < 1 || n < 0) throw DomainError("e_bracket: bad indices");
    const int d = q.digits10();
    const BigComplex one(1, 0, d);
    BigComplex acc(0, 0, d);
    BigComplex qk = q;
    BigComplex qkr = pow_int(q, r);
    const BigComplex qr = pow_int(q, r);
    for (long k = 1; k <= n; ++k) {
        acc += qkr / pow_int(one - qk, l);
        qk *= q;
        qkr *= qr;
    }
    return acc;
}

QContext::QContext(ModularPair pair)
    : pair_(std::move(pair)), tol_(BigReal::pow10(-(pair_.digits + kGuardDigits), pair_.digits)) {}

QContext::QContext(ModularPair pair, BigReal tol) : pair_(std::move(pair)), tol_(std::move(tol)) {}

BigComplex QContext::cached(int kind, long l, long m) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({kind, l, m});
        if (it != memo_.end()) return it->second;
    }
    BigComplex value(digits());
    switch (kind) {
        case 0:
            value = e_series(l, m, pair_.q, tol_);
            break;
        case 1:
            value = e_series(l, m, pair_.qt, tol_);
            break;
        default:
            value = e_tilde(l, m, pair_.qt, tol_);
            break;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(std::make_tuple(kind, l, m), value);
    return it->second;
}

BigComplex QContext::E_q(long l, long m) const { return cached(0, l, m); }
BigComplex QContext::E_qt(long l, long n) const { return cached(1, l, n); }
BigComplex QContext::Et_qt(long l, long n) const { return cached(2, l, n); }
BigComplex QContext::e_l(long l) const { return cached(1, l, 0); }

BigComplex XSeries::at_one() const {
    BigComplex acc(0, 0, digits());
    for (const auto& v : c) acc += v;
    return acc;
}

XSeries XSeries::shift_q(long j) const {
    XSeries out{Coeffs(), q};
    out.c.reserve(c.size());
    const BigComplex qj = pow_int(q, j);
    BigComplex f(1, 0, digits());
    for (std::size_t m = 0; m < c.size(); ++m) {
        out.c.push_back(c[m] * f);
        f *= qj;
    }
    return out;
}

XSeries f_ab_series(long A, long B, const BigComplex& q, std::size_t order) {
    if (!(B > A && A > 0)) throw DomainError("f_ab_series: need B > A > 0");
    const int d = q.digits10();
    if (!(abs(q) < BigReal(1, d))) throw DomainError("f_ab_series: |q| < 1 required");
    XSeries out{Coeffs(), q};
    out.c.reserve(order + 1);
    out.c.emplace_back(1, 0, d);
    const BigComplex one(1, 0, d);
    BigComplex qm(1, 0, d);
    BigComplex qAm(1, 0, d);
    const BigComplex qA = pow_int(q, A);
    for (std::size_t m = 1; m <= order; ++m) {
        qm *= q;
        qAm *= qA;  // q^{A m}
        BigComplex ratio = qAm / pow_int(one - qm, B);
        if (A % 2 == 1) ratio = -ratio;
        out.c.push_back(out.c.back() * ratio);
    }
    return out;
}

BigComplex f_ab_coeff(long A, long B, long m, const BigComplex& q) {
    return f_ab_series(A, B, q, static_cast<std::size_t>(m)).c.back();
}

XSeries delta_action(const XSeries& s) {
    XSeries out = s;
    for (std::size_t m = 0; m < out.c.size(); ++m) {
        out.c[m] *= static_cast<long>(m);
    }
    return out;
}

XSeries delta_k_action(const XSeries& s, long k, const BigReal& tail_tol) {
    XSeries out = s;
    for (std::size_t m = 0; m < out.c.size(); ++m) {
        out.c[m] *= e_series(k, static_cast<long>(m), s.q, tail_tol);
    }
    return out;
}

XSeries delta_k_action_direct(const XSeries& s, long k, const BigReal& tail_tol) {
    const int d = s.digits();
    const BigComplex one(1, 0, d);
    const BigReal absq = abs(s.q);
    XSeries out{Coeffs(s.c.size(), BigComplex(0, 0, d)), s.q};
    BigReal in_norm(0, d);
    for (const auto& v : s.c) in_norm = max(in_norm, abs(v));
    BigComplex qs = s.q;
    const long cap = series_cap(d);
    for (long ss = 1;; ++ss) {
        BigComplex factor = qs / (one - qs);
        if (k > 1) factor *= ipow_l(ss, k - 1);
        // F(q^s x): coefficient m picks up q^{s m}
        BigComplex qsm(1, 0, d);
        for (std::size_t m = 0; m < s.c.size(); ++m) {
            out.c[m] += factor * qsm * s.c[m];
            qsm *= qs;
        }
        BigReal bound = abs(factor) * in_norm;
        BigReal rho = absq * BigReal::from_double(std::pow((ss + 1.0) / ss, k - 1.0), d);
        if (ss >= k + 2 && rho < BigReal::from_double(0.9, d) &&
            bound * rho / (BigReal(1, d) - rho) < tail_tol) {
            break;
        }
        if (ss > cap) throw ConvergenceError("delta_k_action_direct: tail not certified");
        qs *= s.q;
    }
    return out;
}

namespace {

// prod over k of (1 - c_k (e^x - 1)) with c_k = q^k/(1 - q^k), as x-series
Coeffs product_over_geometric(const BigComplex& q, long k_start, long k_count_or_neg,
                              std::size_t order, const BigReal& tol, int d) {
    const BigComplex one(1, 0, d);
    // e^x - 1 coefficients
    Coeffs expm1(order + 1, BigComplex(0, 0, d));
    {
        BigReal fac(1, d);
        for (std::size_t j = 1; j <= order; ++j) {
            fac *= static_cast<long>(j);
            expm1[j] = BigComplex(BigReal(1, d) / fac, BigReal(0, d));
        }
    }
    Coeffs acc(order + 1, BigComplex(0, 0, d));
    acc[0] = one;
    BigComplex qk = pow_int(q, k_start);
    const long cap = series_cap(d);
    for (long i = 0;; ++i) {
        if (k_count_or_neg >= 0 && i >= k_count_or_neg) break;
        if (k_count_or_neg < 0) {
            // infinite product: stop once the remaining factors perturb
            // coefficients by less than tol
            BigReal rem = abs(qk) / (BigReal(1, d) - abs(q));
            if (i > 0 && rem < tol) break;
            if (i > cap) throw ConvergenceError("phi taylor: product tail not certified");
        }
        BigComplex ck = qk / (one - qk);
        Coeffs factor(order + 1, BigComplex(0, 0, d));
        factor[0] = one;
        for (std::size_t j = 1; j <= order; ++j) factor[j] = -(ck * expm1[j]);
        acc = poly_mul(acc, factor, order, d);
        qk *= q;
    }
    return acc;
}

}  // namespace

Coeffs phi_m_taylor_expE(long m, const BigComplex& q, std::size_t order, const BigReal& tol) {
    const int d = q.digits10();
    Coeffs a(order + 1, BigComplex(0, 0, d));
    BigReal fac(1, d);
    for (std::size_t l = 1; l <= order; ++l) {
        fac *= static_cast<long>(l);
        a[l] = -(e_series(static_cast<long>(l), m, q, tol) / fac);
    }
    return poly_exp(a, order, d);
}

Coeffs phi_m_taylor_product(long m, const BigComplex& q, std::size_t order, const BigReal& tol) {
    return product_over_geometric(q, m + 1, -1, order, tol, q.digits10());
}

Coeffs phitilde_n_taylor_expE(long n, const BigComplex& qt, std::size_t order, const BigReal& tol) {
    const int d = qt.digits10();
    Coeffs a(order + 1, BigComplex(0, 0, d));
    BigReal fac(1, d);
    for (std::size_t l = 1; l <= order; ++l) {
        fac *= static_cast<long>(l);
        a[l] = e_tilde(static_cast<long>(l), n, qt, tol) / fac;
    }
    return poly_exp(a, order, d);
}

Coeffs phitilde_n_taylor_product(long n, const BigComplex& qt, std::size_t order,
                                 const BigReal& tol) {
    const int d = qt.digits10();
    // (qt;qt)_inf / (qt e^x; qt)_inf -> inverse of prod_{k>=1}
    Coeffs p1 = product_over_geometric(qt, 1, -1, order, tol, d);
    // (qt^{-1};qt^{-1})_n / (qt^{-1} e^x; qt^{-1})_n -> inverse of finite prod
    const BigComplex qt_inv = BigComplex(1, 0, d) / qt;
    Coeffs p2 = product_over_geometric(qt_inv, 1, n, order, tol, d);
    return poly_inv(poly_mul(p1, p2, order, d), order, d);
}

BigComplex phi_m_value(long m, const BigComplex& z, const ModularPair& pair) {
    const BigComplex qm1 = pow_int(pair.q, m + 1);
    return qpochhammer_inf(qm1 * exp(z), pair.q) / qpochhammer_inf(qm1, pair.q);
}

BigComplex phitilde_n_value(long n, const BigComplex& z, const ModularPair& pair) {
    const int d = pair.digits;
    const BigComplex ez = exp(z);
    const BigComplex qt_inv = BigComplex(1, 0, d) / pair.qt;
    BigComplex inf_part =
        qpochhammer_inf(pair.qt, pair.qt) / qpochhammer_inf(pair.qt * ez, pair.qt);
    BigComplex fin_part =
        qpochhammer(qt_inv, qt_inv, n) / qpochhammer(qt_inv * ez, qt_inv, n);
    return inf_part * fin_part;
}

}  // namespace qdilog
