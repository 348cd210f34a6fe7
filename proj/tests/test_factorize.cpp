#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdilog/errors.hpp"
#include "qdilog/factorize.hpp"
#include "qdilog/wseries.hpp"
#include "test_util.hpp"

using namespace qdilog;
using namespace qdilog::testutil;

namespace {
constexpr int P = 40;

// closed form of the (1,2) residue:
// R = b(1/2 + m - 2 E_1^{(m)}(q)) - (1/b)(1/2 + n - 2 E_1^{(n)}(qt))
BigComplex r12_oracle(long m, long n, const QContext& ctx) {
    const ModularPair& pr = ctx.pair();
    const int d = P;
    BigComplex half(BigReal::from_string("0.5", d));
    BigComplex left = pr.b * (half + BigComplex(m, 0, d) - ctx.E_q(1, m) * 2);
    BigComplex right = pr.b_inv * (half + BigComplex(n, 0, d) - ctx.E_qt(1, n) * 2);
    return left - right;
}

// closed form of the (2,3) residue: the three-block R_{m,n}
BigComplex r23_oracle(long m, long n, const QContext& ctx) {
    const ModularPair& pr = ctx.pair();
    const int d = P;
    BigComplex e1m = ctx.E_q(1, m), e2m = ctx.E_q(2, m);
    BigComplex e1n = ctx.E_qt(1, n), e2n = ctx.E_qt(2, n), e20 = ctx.E_qt(2, 0);
    BigComplex b2 = pr.b * pr.b, bm2 = pr.b_inv * pr.b_inv;
    BigComplex line1 = BigComplex(1 + 4 * m + 4 * m * m, 0, d) - e1m * (6 + 12 * m) +
                       e1m * e1m * 9 - e2m * 3;
    BigComplex pihat(BigReal(0, d), -(BigReal(1, d) / (BigReal::pi(d) * 2)));
    BigComplex line2 = (BigComplex(1 + 2 * m, 0, d) - e1m * 3) *
                       (BigComplex(1 + 2 * n, 0, d) - e1n * 6) / 2;
    BigComplex line3 = BigComplex(-n - n * n, 0, d) - e20 * 6 + e1n * (3 + 6 * n) -
                       e1n * e1n * 9 + e2n * 3;
    return -(b2 * line1) / 2 - pihat + line2 + (bm2 * line3) / 2;
}
}  // namespace

TEST_CASE("residue matches the closed-form (1,2) and (2,3) expressions") {
    for (double theta : {0.25, 1.0 / 3.0}) {
        QContext ctx(pair_from_polar(1.0, theta, P));
        for (long m = 0; m <= 3; ++m) {
            for (long n = 0; n <= 3; ++n) {
                CHECK(rel_diff(residue_rmn(1, 2, m, n, ctx), r12_oracle(m, n, ctx)) <
                      tol10(P - kGuardDigits, P));
            }
        }
        for (long m = 0; m <= 2; ++m) {
            for (long n = 0; n <= 2; ++n) {
                CHECK(rel_diff(residue_rmn(2, 3, m, n, ctx), r23_oracle(m, n, ctx)) <
                      tol10(P - kGuardDigits, P));
            }
        }
    }
}

TEST_CASE("residue is stable under expansion padding") {
    QContext ctx(pair_from_polar(1.1, 0.2, P));
    for (long A = 1; A <= 2; ++A) {
        for (long B = A + 1; B <= 4; ++B) {
            for (long m = 0; m <= 2; ++m) {
                BigComplex lo = residue_rmn(A, B, m, 1, ctx, 2);
                BigComplex hi = residue_rmn(A, B, m, 1, ctx, 5);
                CHECK(rel_diff(lo, hi) < tol10(P - kGuardDigits, P));
            }
        }
    }
}

TEST_CASE("bracket with simple polynomials reproduces the 4_1 series pair") {
    QContext ctx(pair_from_polar(1.0, 0.25, P));
    const ModularPair& pr = ctx.pair();
    BigReal tol = tol10(P + kGuardDigits, P);
    // g(q) = <F>, G(q) = <(2 + 2 delta - 4 delta_1) F>
    auto g_of = [&](const BigComplex& q) {
        return f_ab_series(1, 2, q, 40).at_one();
    };
    auto G_of = [&](const BigComplex& q, bool tilde) {
        XSeries f = f_ab_series(1, 2, q, 40);
        BigComplex acc(0, 0, P);
        for (std::size_t m = 0; m < f.c.size(); ++m) {
            BigComplex e1 = tilde ? ctx.E_qt(1, static_cast<long>(m)) : ctx.E_q(1, static_cast<long>(m));
            acc += (BigComplex(2 + 2 * static_cast<long>(m), 0, P) - e1 * 4) * f.c[m];
        }
        return acc;
    };

    OperatorPolynomial one(1);
    BigComplex br1 = bracket(one, 1, 2, ctx, tol);
    CHECK(rel_diff(br1, g_of(pr.q) * g_of(pr.qt)) < tol10(P - kGuardDigits, P));

    OperatorPolynomial gpoly = OperatorPolynomial(2) +
                               OperatorPolynomial::gen(gen_delta()) * Rational(2) -
                               OperatorPolynomial::gen(gen_delta_l(1)) * Rational(4);
    BigComplex br2 = bracket(gpoly, 1, 2, ctx, tol);
    CHECK(rel_diff(br2, G_of(pr.q, false) * g_of(pr.qt)) < tol10(P - kGuardDigits, P));

    // single delta_l monomial against the E-series value on a basis slice
    OperatorPolynomial dl = OperatorPolynomial::gen(gen_delta_l(2));
    BigComplex br3 = bracket(dl, 1, 2, ctx, tol);
    XSeries f = f_ab_series(1, 2, pr.q, 40);
    XSeries ft = f_ab_series(1, 2, pr.qt, 40);
    BigComplex expect(0, 0, P);
    for (std::size_t m = 0; m < f.c.size(); ++m) {
        expect += ctx.E_q(2, static_cast<long>(m)) * f.c[m];
    }
    expect *= ft.at_one();
    CHECK(rel_diff(br3, expect) < tol10(P - kGuardDigits, P));

    // e_l generators substitute to e_l(qt)
    OperatorPolynomial ep = OperatorPolynomial::gen(gen_e(2));
    BigComplex br4 = bracket(ep, 1, 2, ctx, tol);
    CHECK(rel_diff(br4, ctx.e_l(2) * g_of(pr.q) * g_of(pr.qt)) < tol10(P - kGuardDigits, P));
}

TEST_CASE("lattice weights equal the F-series coefficients") {
    // t^A_n(qt)/(qt^{-1};qt^{-1})_n^B computed literally equals the n-th
    // coefficient of F_{B-A,B}(qt, x)
    QContext ctx(pair_from_polar(1.0, 1.0 / 3.0, P));
    const ModularPair& pr = ctx.pair();
    const BigComplex qt_inv = BigComplex(1, 0, P) / pr.qt;
    for (long A = 1; A <= 3; ++A) {
        for (long B = A + 1; B <= 4; ++B) {
            for (long n = 0; n <= 6; ++n) {
                BigComplex lit = pow_int(pr.qt, -A * n * (n + 1) / 2) /
                                 pow_int(qpochhammer(qt_inv, qt_inv, n), B);
                if ((A * n) % 2 == 1) lit = -lit;
                CHECK(rel_diff(lit, f_ab_coeff(B - A, B, n, pr.qt)) <
                      tol10(P - kGuardDigits, P));
            }
        }
    }
}

TEST_CASE("two right-hand-side routes agree") {
    for (double theta : {0.25, 1.0 / 3.0}) {
        QContext ctx(pair_from_polar(1.0, theta, P));
        BigReal tol = tol10(P, P);
        for (auto [A, B] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 3}}) {
            BigComplex fact = factorized_value(A, B, ctx, tol);
            BigComplex brk = bracket(compute_pab(A, B), A, B, ctx, tol) *
                             factorization_prefactor(A, B, ctx.pair());
            CHECK(rel_diff(fact, brk) < tol10(P - kGuardDigits - 5, P));
        }
    }
}

TEST_CASE("knot invariants against the general pipeline") {
    for (double theta : {0.25, 1.0 / 3.0}) {
        QContext ctx(pair_from_polar(1.0, theta, P));
        BigReal tol = tol10(P, P);
        CHECK(rel_diff(knot_41(ctx, tol), factorized_value(1, 2, ctx, tol)) < tol10(25, P));
        CHECK(rel_diff(knot_52(ctx, tol), factorized_value(2, 3, ctx, tol)) < tol10(25, P));
    }
}

TEST_CASE("t_n(q^{-1}) = t_n(q) for the 4_1 coefficients, exact at rational q") {
    // (-1)^n q^{n(n+1)/2}/(q)_n^2 is invariant under q -> 1/q
    Rational q(1, 3);
    Rational qi(3, 1);
    for (long n = 0; n <= 8; ++n) {
        auto t_of = [&](const Rational& base) {
            Rational poch(1);
            for (long k = 1; k <= n; ++k) poch *= (Rational(1) - rational_pow(base, k));
            Rational v = rational_pow(base, n * (n + 1) / 2) / (poch * poch);
            return (n % 2 == 1) ? Rational(-v) : v;
        };
        CHECK(t_of(q) == t_of(qi));
    }
}

TEST_CASE("factorized_value rejects bad parameters") {
    QContext ctx(pair_from_polar(1.0, 0.25, P));
    BigReal tol = tol10(P, P);
    CHECK_THROWS_AS(factorized_value(2, 2, ctx, tol), DomainError);
    CHECK_THROWS_AS(factorized_value(0, 2, ctx, tol), DomainError);
    CHECK_THROWS_AS(bracket(OperatorPolynomial(1), 3, 2, ctx, tol), DomainError);
}
