#include "qdilog/qdiff.hpp"

#include "qdilog/errors.hpp"

namespace qdilog {

std::vector<Rational> f_ab_rational_coeffs(long A, long B, const Rational& q0,
                                           std::size_t order) {
    if (!(B > A && A > 0)) throw DomainError("f_ab_rational_coeffs: need B > A > 0");
    if (q0 == 0) throw DomainError("f_ab_rational_coeffs: q0 must be nonzero");
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (long m = 0; m <= static_cast<long>(order); ++m) {
        Rational poch(1);
        for (long k = 1; k <= m; ++k) {
            poch *= (Rational(1) - rational_pow(q0, k));
        }
        Rational t = rational_pow(q0, A * m * (m + 1) / 2) / rational_pow(poch, B);
        if ((A * m) % 2 == 1) t = -t;
        out.push_back(t);
    }
    return out;
}

bool check_reflection(long A, long B, const Rational& q0, std::size_t order) {
    if (!(q0 > 0 && q0 < 1)) throw DomainError("check_reflection: need 0 < q0 < 1");
    std::vector<Rational> lhs = f_ab_rational_coeffs(A, B, Rational(1) / q0, order);
    std::vector<Rational> rhs = f_ab_rational_coeffs(B - A, B, q0, order);
    return lhs == rhs;
}

BigReal check_linear_qdiff(long A, long B, const BigComplex& q, std::size_t order) {
    if (!(B > A && A > 0)) throw DomainError("check_linear_qdiff: need B > A > 0");
    const int d = q.digits10();
    XSeries f = f_ab_series(A, B, q, order);
    // (1 - E)^B F: coefficient m gets (1 - q^m)^B; x E^A F: coefficient m gets
    // q^{A(m-1)} t(m-1).
    const BigComplex one(1, 0, d);
    BigReal residual(0, d);
    const std::size_t top = order >= static_cast<std::size_t>(A) ? order - A : 0;
    for (std::size_t m = 0; m <= top; ++m) {
        BigComplex qm = pow_int(q, static_cast<long>(m));
        BigComplex val = pow_int(one - qm, B) * f.c[m];
        if (m >= 1) {
            BigComplex shift =
                pow_int(q, A * (static_cast<long>(m) - 1)) * pow_int(q, A) * f.c[m - 1];
            // note q^A q^{A(m-1)} = q^{Am}
            if (A % 2 == 0) {
                val -= shift;
            } else {
                val += shift;
            }
        }
        residual = max(residual, abs(val));
    }
    return residual;
}

XSeries omega_series(long A, long B, const BigComplex& q, std::size_t order) {
    XSeries f = f_ab_series(A, B, q, order);
    XSeries fq = f.shift_q(1);
    const int d = q.digits10();
    XSeries out{poly_mul(fq.c, poly_inv(f.c, order, d), order, d), q};
    return out;
}

BigReal omega_nonlinear_residual(long A, long B, const BigComplex& q, std::size_t order) {
    const int d = q.digits10();
    XSeries om = omega_series(A, B, q, order);
    // omega_j as explicit products of shifted omega copies
    std::vector<Coeffs> omega_j;
    omega_j.push_back(Coeffs(order + 1, BigComplex(0, 0, d)));
    omega_j[0][0] = BigComplex(1, 0, d);
    for (long j = 1; j <= B; ++j) {
        XSeries shifted = om.shift_q(j - 1);
        omega_j.push_back(poly_mul(omega_j.back(), shifted.c, order, d));
    }
    Coeffs acc(order + 1, BigComplex(0, 0, d));
    for (long j = 0; j <= B; ++j) {
        Rational c(binomial(B, j));
        if (j % 2 == 1) c = -c;
        BigReal cr = to_bigreal(c, d);
        for (std::size_t k = 0; k <= order; ++k) acc[k] += omega_j[static_cast<std::size_t>(j)][k] * cr;
    }
    // -(-1)^A q^A x omega_A
    BigComplex qA = pow_int(q, A);
    for (std::size_t k = order; k >= 1; --k) {
        BigComplex t = qA * omega_j[static_cast<std::size_t>(A)][k - 1];
        if (A % 2 == 0) {
            acc[k] -= t;
        } else {
            acc[k] += t;
        }
    }
    BigReal residual(0, d);
    const std::size_t top = order >= static_cast<std::size_t>(A) ? order - A : 0;
    for (std::size_t k = 0; k <= top; ++k) residual = max(residual, abs(acc[k]));
    return residual;
}

bool telescoping_certificate(long A, long B, const Rational& q0, long m_max) {
    if (!(B > A && A > 0)) throw DomainError("telescoping_certificate: need B > A > 0");
    std::vector<Rational> t = f_ab_rational_coeffs(A, B, q0, static_cast<std::size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) {
        Rational lhs = rational_pow(Rational(1) - rational_pow(q0, m + 1), B) *
                       t[static_cast<std::size_t>(m + 1)];
        Rational rhs = rational_pow(q0, A * (m + 1)) * t[static_cast<std::size_t>(m)];
        if (A % 2 == 1) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    // eliminated form: combining the m-recursion with the x-shift law
    // t(m, q^j x) = q^{jm} t(m, x) gives
    //   sum_j (-1)^j C(B,j) q^{j(m+1)} t(m+1) = (-1)^A q^{A(m+1)} t(m).
    for (long m = 0; m <= m_max; ++m) {
        Rational lhs(0);
        for (long j = 0; j <= B; ++j) {
            Rational c(binomial(B, j));
            if (j % 2 == 1) c = -c;
            lhs += c * rational_pow(q0, j * (m + 1));
        }
        lhs *= t[static_cast<std::size_t>(m + 1)];
        Rational rhs = rational_pow(q0, A * (m + 1)) * t[static_cast<std::size_t>(m)];
        if (A % 2 == 1) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace qdilog
