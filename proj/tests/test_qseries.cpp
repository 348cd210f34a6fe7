#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/eulerian.hpp"
#include "qdilog/faddeev.hpp"
#include "qdilog/qseries.hpp"
#include "qdilog/ring.hpp"
#include "test_util.hpp"

using namespace qdilog;
using namespace qdilog::testutil;

namespace {
constexpr int P = 40;

BigComplex cplx(const char* re, const char* im = "0") {
    return BigComplex(BigReal::from_string(re, P), BigReal::from_string(im, P));
}

// Et_{l,r}^{(n)}(qt): the (l,r)-refined tilde case split used in the proofs.
BigComplex e_tilde_lr(long l, long r, long n, const BigComplex& qt, const BigReal& tol) {
    if (l == 1 && r == 1) {
        return BigComplex(-n, 0, qt.digits10()) + e_lr_series(1, 1, n, qt, tol);
    }
    if (l % 2 == 1) return e_lr_series(l, r, n, qt, tol);
    return e_lr_series(l, r, 0, qt, tol) * 2 - e_lr_series(l, r, n, qt, tol);
}
}  // namespace

TEST_CASE("eulerian table rows 1..9, recursion and alternating sum") {
    const std::vector<std::vector<long>> table = {
        {1},
        {1, 1},
        {1, 4, 1},
        {1, 11, 11, 1},
        {1, 26, 66, 26, 1},
        {1, 57, 302, 302, 57, 1},
        {1, 120, 1191, 2416, 1191, 120, 1},
        {1, 247, 4293, 15619, 15619, 4293, 247, 1},
        {1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1},
    };
    for (std::size_t n = 1; n <= table.size(); ++n) {
        for (std::size_t m = 0; m < table[n - 1].size(); ++m) {
            Integer expect(table[n - 1][m]);
            CHECK(eulerian(static_cast<long>(n), static_cast<long>(m)) == expect);
            CHECK(eulerian_by_sum(static_cast<long>(n), static_cast<long>(m)) == expect);
        }
    }
    CHECK(eulerian(4, 1) == 11);
    CHECK(eulerian(7, 3) == 2416);
    for (long n = 1; n <= 9; ++n) CHECK(eulerian(n, 0) == 1);
    CHECK_THROWS_AS(eulerian(3, 3), DomainError);
    CHECK_THROWS_AS(eulerian(0, 0), DomainError);
    CHECK_THROWS_AS(eulerian(4, -1), DomainError);
}

TEST_CASE("f_ab_series coefficients") {
    BigComplex q = cplx("0.1");
    BigComplex one(1, 0, P);
    for (long A = 1; A <= 2; ++A) {
        for (long B = A + 1; B <= 4; ++B) {
            CHECK(f_ab_series(A, B, q, 3).c[0] == one);
        }
    }
    // (1,2): coefficient 1 is -q/(1-q)^2
    XSeries f12 = f_ab_series(1, 2, q, 4);
    BigComplex expect1 = -(q / ((one - q) * (one - q)));
    CHECK(rel_diff(f12.c[1], expect1) < tol10(P - kGuardDigits, P));
    // (2,3): coefficient m = q^{m(m+1)} / (q;q)_m^3, all signs positive
    XSeries f23 = f_ab_series(2, 3, q, 6);
    for (long m = 0; m <= 6; ++m) {
        BigComplex expect =
            pow_int(q, m * (m + 1)) / pow_int(qpochhammer(q, q, m), 3);
        CHECK(rel_diff(f23.c[static_cast<std::size_t>(m)], expect) < tol10(P - kGuardDigits, P));
        CHECK(f23.c[static_cast<std::size_t>(m)].re().sign() > 0);
    }
    // definition-direct check of the (1,3) coefficients against the formula
    XSeries f13 = f_ab_series(1, 3, q, 6);
    for (long m = 0; m <= 6; ++m) {
        BigComplex expect = pow_int(q, m * (m + 1) / 2) / pow_int(qpochhammer(q, q, m), 3);
        if (m % 2 == 1) expect = -expect;
        CHECK(rel_diff(f13.c[static_cast<std::size_t>(m)], expect) < tol10(P - kGuardDigits, P));
    }
    CHECK_THROWS_AS(f_ab_series(1, 2, cplx("1.5"), 3), DomainError);
    CHECK_THROWS_AS(f_ab_series(2, 2, q, 3), DomainError);
}

TEST_CASE("delta operators") {
    BigReal tol = tol10(P + kGuardDigits, P);
    BigComplex q = cplx("0.1");
    // delta kills constants
    XSeries constant{Coeffs{BigComplex(5, 0, P)}, q};
    XSeries dc = delta_action(constant);
    CHECK(dc.c[0].is_zero());
    // <delta_l(x^m)> = E_l^{(m)}(q) on the monomial x^m
    for (long l = 1; l <= 3; ++l) {
        for (long m = 0; m <= 3; ++m) {
            XSeries mono{Coeffs(static_cast<std::size_t>(m) + 1, BigComplex(0, 0, P)), q};
            mono.c.back() = BigComplex(1, 0, P);
            XSeries acted = delta_k_action(mono, l, tol);
            CHECK(rel_diff(acted.at_one(), e_series(l, m, q, tol)) < tol10(P - kGuardDigits, P));
        }
    }
    // <delta_k(1)> = e_k(q) = E_k^{(0)}(q)
    XSeries unit{Coeffs{BigComplex(1, 0, P)}, q};
    for (long k = 1; k <= 4; ++k) {
        CHECK(rel_diff(delta_k_action(unit, k, tol).at_one(), e_series(k, 0, q, tol)) <
              tol10(P - kGuardDigits, P));
    }
    // closed form vs defining sum on F_{1,2}
    XSeries f = f_ab_series(1, 2, q, 8);
    for (long k = 1; k <= 3; ++k) {
        XSeries closed = delta_k_action(f, k, tol);
        XSeries direct = delta_k_action_direct(f, k, tol);
        for (std::size_t m = 0; m <= 8; ++m) {
            CHECK(abs(closed.c[m] - direct.c[m]) < tol10(P - kGuardDigits, P));
        }
    }
}

TEST_CASE("E series basics and identities") {
    BigReal tol = tol10(P + kGuardDigits, P);
    // E_l^{(m)}(0) = 0
    for (long l = 1; l <= 3; ++l) {
        CHECK(e_series(l, 2, BigComplex(0, 0, P), tol).is_zero());
    }
    BigComplex q = cplx("0.1");
    // sum_r A_{l-1,r} E_{l,r+1}^{(m)} = E_l^{(m)}, l <= 4, m <= 3
    for (long l = 1; l <= 4; ++l) {
        for (long m = 0; m <= 3; ++m) {
            BigComplex acc(0, 0, P);
            for (long r = 0; r <= l - 1; ++r) {
                // A_{0,0} = 1 and A_{n,m} = 0 for m > n-1 (vacuous top index)
                Rational a = (l == 1) ? Rational(1)
                             : (r <= l - 2) ? Rational(eulerian(l - 1, r))
                                            : Rational(0);
                if (a == 0) continue;
                acc += e_lr_series(l, r + 1, m, q, tol) * to_bigreal(a, P);
            }
            CHECK(rel_diff(acc, e_series(l, m, q, tol)) < tol10(P - kGuardDigits, P));
        }
    }
    // generating-coefficient route: E_{l,r}^{(m)}(q) = sum_s a_{l,s} q^{s(m+1)}/(1-q^s)
    // with x^r/(1-x)^l = sum_{s>=r} C(s-r+l-1, l-1) x^s
    BigComplex one(1, 0, P);
    for (long l = 1; l <= 3; ++l) {
        for (long r = 1; r <= l; ++r) {
            for (long m = 0; m <= 2; ++m) {
                BigComplex acc(0, 0, P);
                for (long s = r; s <= 120; ++s) {
                    Rational a(binomial(s - r + l - 1, l - 1));
                    BigComplex qs = pow_int(q, s);
                    acc += pow_int(q, s * (m + 1)) * to_bigreal(a, P) / (one - qs);
                }
                CHECK(rel_diff(acc, e_lr_series(l, r, m, q, tol)) < tol10(P - kGuardDigits, P));
            }
        }
    }
}

TEST_CASE("tilde E identities at qt = 1/10") {
    BigReal tol = tol10(P + kGuardDigits, P);
    BigComplex qt = cplx("0.1");
    BigComplex qt_inv = cplx("10");
    // lemE2 with its explicit right-hand side at n = 2:
    // E_{1,1}^{(0)}(qt) + E_{1,1}^{[n]}(qt^{-1}) = -n + sum_{k>n} qt^k/(1-qt^k)
    for (long n = 0; n <= 3; ++n) {
        BigComplex lhs = e_lr_series(1, 1, 0, qt, tol) + e_bracket(1, 1, n, qt_inv);
        BigComplex rhs = BigComplex(-n, 0, P) + e_lr_series(1, 1, n, qt, tol);
        CHECK(abs(lhs - rhs) < tol10(P - kGuardDigits, P));
    }
    // lemE1: E_{l,r}^{(0)}(qt) + E_{l,l-r}^{[n]}(qt^{-1}) = Et_{l,r}^{(n)}(qt), l > r >= 1
    for (long l = 2; l <= 4; ++l) {
        for (long r = 1; r < l; ++r) {
            for (long n = 0; n <= 3; ++n) {
                BigComplex lhs = e_lr_series(l, r, 0, qt, tol) + e_bracket(l, l - r, n, qt_inv);
                BigComplex rhs = e_tilde_lr(l, r, n, qt, tol);
                CHECK(abs(lhs - rhs) < tol10(P - kGuardDigits, P));
            }
        }
    }
    // the l = 1 case-split member agrees with e_tilde
    for (long n = 0; n <= 3; ++n) {
        CHECK(abs(e_tilde(1, n, qt, tol) - (BigComplex(-n, 0, P) + e_series(1, n, qt, tol))) <
              tol10(P - kGuardDigits, P));
    }
}

TEST_CASE("phi_m / phitilde_n Taylor: product route vs exp-of-E route") {
    BigReal tol = tol10(P + kGuardDigits, P);
    const std::size_t order = 6;
    for (const BigComplex& q : {cplx("0.1"), cplx("0.05", "0.02")}) {
        for (long m = 0; m <= 4; ++m) {
            Coeffs a = phi_m_taylor_expE(m, q, order, tol);
            Coeffs b = phi_m_taylor_product(m, q, order, tol);
            CHECK(abs(a[0] - BigComplex(1, 0, P)) < tol10(30, P));
            CHECK(abs(a[1] + e_series(1, m, q, tol)) < tol10(30, P));
            for (std::size_t k = 0; k <= order; ++k) {
                CHECK(abs(a[k] - b[k]) < tol10(30, P));
            }
        }
        for (long n = 0; n <= 4; ++n) {
            Coeffs a = phitilde_n_taylor_expE(n, q, order, tol);
            Coeffs b = phitilde_n_taylor_product(n, q, order, tol);
            CHECK(abs(a[0] - BigComplex(1, 0, P)) < tol10(30, P));
            BigComplex et1 = e_tilde(1, n, q, tol);
            BigComplex et2 = e_tilde(2, n, q, tol);
            CHECK(abs(a[2] - (et1 * et1 + et2) / 2) < tol10(30, P));
            for (std::size_t k = 0; k <= order; ++k) {
                CHECK(abs(a[k] - b[k]) < tol10(30, P));
            }
        }
    }
}

TEST_CASE("memo context reproduces fresh sums") {
    ModularPair pr = pair_from_polar(1.0, 0.25, P);
    QContext ctx(pr);
    for (long l = 1; l <= 3; ++l) {
        for (long m = 0; m <= 2; ++m) {
            CHECK(ctx.E_q(l, m) == ctx.E_q(l, m));  // stable
            CHECK(abs(ctx.E_q(l, m) - e_series(l, m, pr.q, ctx.tol())) ==
                  BigReal(0, P));  // memo equals defining sum bit-for-bit
            CHECK(abs(ctx.Et_qt(l, m) - e_tilde(l, m, pr.qt, ctx.tol())) == BigReal(0, P));
        }
    }
}

TEST_CASE("Phi_b near the (m,n) pole factors through phi_m, phitilde_n") {
    for (double theta : {0.25, 1.0 / 3.0}) {
        ModularPair pr = pair_from_polar(1.0, theta, P);
        const BigReal two_pi = BigReal::pi(P) * 2;
        const BigComplex one(1, 0, P);
        BigComplex x = cplx("0.045", "0.03");
        BigComplex eta = eta_ratio(pr);
        const BigComplex qt_inv = one / pr.qt;
        for (long m = 0; m <= 1; ++m) {
            for (long n = 0; n <= 1; ++n) {
                BigComplex pole = pole_location(PoleIndex{m, n}, pr);
                BigComplex lhs = phi_b(x + pole, pr);
                BigComplex rhs = eta / qpochhammer(pr.q, pr.q, m) /
                                 qpochhammer(qt_inv, qt_inv, n) *
                                 phi_m_value(m, x * pr.b * two_pi, pr) *
                                 phitilde_n_value(n, x * pr.b_inv * two_pi, pr) /
                                 (one - exp(x * pr.b_inv * two_pi));
                CHECK(rel_diff(lhs, rhs) < tol10(P - kGuardDigits, P));
            }
        }
    }
}

TEST_CASE("decoupling of (m,n) in the Gaussian factor") {
    for (double theta : {0.25, 0.2}) {
        ModularPair pr = pair_from_polar(theta == 0.2 ? 1.1 : 1.0, theta, P);
        const BigReal pi = BigReal::pi(P);
        const BigComplex i = BigComplex::i(P);
        BigComplex x = cplx("0.31", "-0.12");
        for (long A = 1; A <= 3; ++A) {
            for (long m = 0; m <= 2; ++m) {
                for (long n = 0; n <= 2; ++n) {
                    BigComplex pole = pole_location(PoleIndex{m, n}, pr);
                    BigComplex lhs = exp(-(i * pi * A) * (x + pole) * (x + pole));
                    BigComplex tm = pow_int(pr.q, A * m * (m + 1) / 2);
                    if ((A * m) % 2 == 1) tm = -tm;
                    BigComplex tn = pow_int(pr.qt, -A * n * (n + 1) / 2);
                    if ((A * n) % 2 == 1) tn = -tn;
                    BigComplex pref = pow_int(i, A) * exp((pr.log_q - pr.log_qt) * A / 8);
                    BigComplex expo =
                        exp(-(i * pi * A) * x * x +
                            x * (pr.b * (2 * m + 1) + pr.b_inv * (2 * n + 1)) * pi * A);
                    BigComplex rhs = pref * tm * tn * expo;
                    CHECK(rel_diff(lhs, rhs) < tol10(P - kGuardDigits, P));
                }
            }
        }
    }
}
