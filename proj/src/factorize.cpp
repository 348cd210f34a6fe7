#include "qdilog/factorize.hpp"

#include <functional>

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {

Coeffs poly_pow(const Coeffs& a, unsigned e, std::size_t order, int digits) {
    Coeffs acc(order + 1, BigComplex(0, 0, digits));
    acc[0] = BigComplex(1, 0, digits);
    Coeffs base = a;
    while (e > 0) {
        if (e & 1u) acc = poly_mul(acc, base, order, digits);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base, order, digits);
    }
    return acc;
}

BigComplex inv_two_pi_i(int digits) {
    // (2 pi i)^{-1} = -i/(2 pi)
    return BigComplex(BigReal(0, digits), -(BigReal(1, digits) / (BigReal::pi(digits) * 2)));
}

// evaluates an operator polynomial under a generator assignment
BigComplex eval_poly(const OperatorPolynomial& p,
                     const std::function<BigComplex(GenId)>& value_of, int digits) {
    BigComplex acc(0, 0, digits);
    for (const auto& [mono, coef] : p.terms()) {
        BigComplex term(to_bigreal(coef, digits));
        for (const auto& [g, e] : mono.factors) {
            term *= pow_int(value_of(g), e);
        }
        acc += term;
    }
    return acc;
}

// shell-summed double series sum_{m,n} term(m,n) with Gaussian-decay cutoff:
// stops after two consecutive anti-diagonals whose largest term magnitude
// falls below tol.
BigComplex shell_sum(const std::function<BigComplex(long, long)>& term, const BigReal& tol,
                     int digits, const char* what) {
    BigComplex acc(0, 0, digits);
    int quiet_shells = 0;
    for (long shell = 0; shell <= 400; ++shell) {
        BigReal shell_max(0, digits);
        for (long m = 0; m <= shell; ++m) {
            long n = shell - m;
            BigComplex t = term(m, n);
            acc += t;
            shell_max = max(shell_max, abs(t));
        }
        if (shell_max < tol) {
            if (++quiet_shells >= 2) return acc;
        } else {
            quiet_shells = 0;
        }
    }
    throw ConvergenceError(std::string(what) + ": (m,n) shells failed to decay below tolerance");
}

}  // namespace

BigComplex residue_rmn(long A, long B, long m, long n, const QContext& ctx,
                       std::size_t extra_order) {
    if (!(B > A && A > 0)) throw DomainError("residue_rmn: need B > A > 0");
    if (m < 0 || n < 0) throw DomainError("residue_rmn: need m, n >= 0");
    const int d = ctx.digits();
    const ModularPair& pr = ctx.pair();
    const std::size_t N = static_cast<std::size_t>(B - 1) + extra_order;

    // (1 + u)^{-B} with u_k = b^{-k} w^k/(k+1)!
    Coeffs u(N + 1, BigComplex(0, 0, d));
    u[0] = BigComplex(1, 0, d);
    {
        BigReal fac(1, d);
        BigComplex binv_k(1, 0, d);
        for (std::size_t k = 1; k <= N; ++k) {
            fac *= static_cast<long>(k + 1);
            binv_k *= pr.b_inv;
            u[k] = BigComplex(BigReal(1, d) / fac) * binv_k;
        }
    }
    Coeffs denom = poly_pow(poly_inv(u, N, d), static_cast<unsigned>(B), N, d);

    // exp((A/2) pihat w^2 + A (b(m+1/2) + (n+1/2)/b) w)
    Coeffs expo_arg(N + 1, BigComplex(0, 0, d));
    if (N >= 1) {
        expo_arg[1] = (pr.b * (2 * m + 1) + pr.b_inv * (2 * n + 1)) * A / 2;
    }
    if (N >= 2) {
        expo_arg[2] = inv_two_pi_i(d) * A / 2;
    }
    Coeffs gauss = poly_exp(expo_arg, N, d);

    // phi_m(bw)^B = exp(-B sum_l E_l^{(m)}(q) (bw)^l / l!)
    Coeffs phi_arg(N + 1, BigComplex(0, 0, d));
    Coeffs phit_arg(N + 1, BigComplex(0, 0, d));
    {
        BigReal fac(1, d);
        BigComplex b_l(1, 0, d), binv_l(1, 0, d);
        for (std::size_t l = 1; l <= N; ++l) {
            fac *= static_cast<long>(l);
            b_l *= pr.b;
            binv_l *= pr.b_inv;
            BigReal scale = BigReal(B, d) / fac;
            phi_arg[l] = -(ctx.E_q(static_cast<long>(l), m) * b_l * scale);
            phit_arg[l] = ctx.Et_qt(static_cast<long>(l), n) * binv_l * scale;
        }
    }
    Coeffs num = poly_mul(poly_mul(gauss, poly_exp(phi_arg, N, d), N, d),
                          poly_exp(phit_arg, N, d), N, d);

    // Res = (-1)^B sum_{j=0}^{B-1} num_j denom_{B-1-j}
    BigComplex res(0, 0, d);
    for (long j = 0; j <= B - 1; ++j) {
        res += num[static_cast<std::size_t>(j)] * denom[static_cast<std::size_t>(B - 1 - j)];
    }
    if (B % 2 == 1) res = -res;
    return res;
}

BigComplex factorization_prefactor(long A, long B, const ModularPair& pair) {
    const int d = pair.digits;
    BigComplex root = exp((pair.log_qt - pair.log_q) * (B - 3 * A) / 24);
    BigComplex phase = exp(BigComplex(BigReal(0, d), BigReal::pi(d) * (B + 2 * (A + 1)) / 4));
    return root * phase;
}

namespace {

// weights of eq-style summation: wq(m) = t^A_m(q)/(q;q)_m^B computed literally
struct LatticeWeights {
    LatticeWeights(long A, long B, const ModularPair& pr)
        : A_(A), B_(B), d_(pr.digits), q_(pr.q), qt_inv_(BigComplex(1, 0, pr.digits) / pr.qt),
          qt_(pr.qt) {}

    BigComplex wq(long m) {
        grow(wq_, m, [&](long k) {
            BigComplex t = pow_int(q_, A_ * k * (k + 1) / 2);
            if ((A_ * k) % 2 == 1) t = -t;
            return t / pow_int(qpochhammer(q_, q_, k), B_);
        });
        return wq_[static_cast<std::size_t>(m)];
    }

    BigComplex wt(long n) {
        grow(wt_, n, [&](long k) {
            BigComplex t = pow_int(qt_, -A_ * k * (k + 1) / 2);
            if ((A_ * k) % 2 == 1) t = -t;
            return t / pow_int(qpochhammer(qt_inv_, qt_inv_, k), B_);
        });
        return wt_[static_cast<std::size_t>(n)];
    }

  private:
    void grow(std::vector<BigComplex>& v, long upto, const std::function<BigComplex(long)>& f) {
        for (long k = static_cast<long>(v.size()); k <= upto; ++k) v.push_back(f(k));
    }

    long A_, B_;
    int d_;
    BigComplex q_, qt_inv_, qt_;
    std::vector<BigComplex> wq_, wt_;
};

}  // namespace

BigComplex factorized_value(long A, long B, const QContext& ctx, const BigReal& tol) {
    if (!(B > A && A > 0)) throw DomainError("factorized_value: need B > A > 0");
    const int d = ctx.digits();
    LatticeWeights w(A, B, ctx.pair());
    BigComplex sum = shell_sum(
        [&](long m, long n) { return residue_rmn(A, B, m, n, ctx) * w.wq(m) * w.wt(n); }, tol, d,
        "factorized_value");
    return factorization_prefactor(A, B, ctx.pair()) * sum;
}

BigComplex bracket(const OperatorPolynomial& p, long A, long B, const QContext& ctx,
                   const BigReal& tol) {
    if (!(B > A && A > 0)) throw DomainError("bracket: need B > A > 0");
    const int d = ctx.digits();
    const ModularPair& pr = ctx.pair();
    const BigComplex pihat = inv_two_pi_i(d);

    // coefficients of F_{A,B}(q, x) and F_{B-A,B}(qt, xt), grown on demand
    std::vector<BigComplex> tq{BigComplex(1, 0, d)}, tt{BigComplex(1, 0, d)};
    const BigComplex one(1, 0, d);
    auto grow_t = [&](std::vector<BigComplex>& v, long upto, long Aeff, const BigComplex& q) {
        for (long k = static_cast<long>(v.size()); k <= upto; ++k) {
            BigComplex ratio = pow_int(q, Aeff * k) / pow_int(one - pow_int(q, k), B);
            if (Aeff % 2 == 1) ratio = -ratio;
            v.push_back(v.back() * ratio);
        }
    };

    auto term = [&](long m, long n) {
        grow_t(tq, m, A, pr.q);
        grow_t(tt, n, B - A, pr.qt);
        auto value_of = [&](GenId g) -> BigComplex {
            switch (gen_kind(g)) {
                case GenKind::Delta:
                    return BigComplex(m, 0, d);
                case GenKind::DeltaL:
                    return ctx.E_q(gen_index(g), m);
                case GenKind::DeltaT:
                    return BigComplex(n, 0, d);
                case GenKind::DeltaTL:
                    return ctx.E_qt(gen_index(g), n);
                case GenKind::B:
                    return pr.b;
                case GenKind::PiHat:
                    return pihat;
                case GenKind::E:
                    return ctx.e_l(gen_index(g));
            }
            throw DomainError("bracket: unknown generator");
        };
        return eval_poly(p, value_of, d) * tq[static_cast<std::size_t>(m)] *
               tt[static_cast<std::size_t>(n)];
    };
    return shell_sum(term, tol, d, "bracket");
}

namespace {

// sum_{m >= 0} coef(m) * t(m) with |t| decaying super-geometrically
BigComplex knot_sum(const std::function<BigComplex(long)>& coef,
                    const std::function<BigComplex(long)>& t, const BigReal& tol, int d,
                    const char* what) {
    BigComplex acc(0, 0, d);
    int quiet = 0;
    for (long m = 0; m <= 400; ++m) {
        BigComplex term = coef(m) * t(m);
        acc += term;
        if (abs(term) < tol) {
            if (++quiet >= 2) return acc;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError(std::string(what) + ": series failed to decay");
}

}  // namespace

BigComplex knot_41(const QContext& ctx, const BigReal& tol) {
    const int d = ctx.digits();
    const ModularPair& pr = ctx.pair();
    const BigComplex one(1, 0, d);

    auto make_t = [&](const BigComplex& q) {
        return [&, q](long m) {
            BigComplex t = pow_int(q, m * (m + 1) / 2) / pow_int(qpochhammer(q, q, m), 2);
            return (m % 2 == 1) ? -t : t;
        };
    };
    auto unit = [&](long) { return one; };
    BigComplex g_q = knot_sum(unit, make_t(pr.q), tol, d, "knot_41 g(q)");
    BigComplex g_qt = knot_sum(unit, make_t(pr.qt), tol, d, "knot_41 g(qt)");
    auto big_g = [&](const BigComplex& q, bool tilde) {
        auto coef = [&, tilde](long m) {
            BigComplex e1 = tilde ? ctx.E_qt(1, m) : ctx.E_q(1, m);
            return BigComplex(2 * m + 1, 0, d) - e1 * 4;
        };
        return knot_sum(coef, make_t(q), tol, d, "knot_41 G");
    };
    BigComplex G_q = big_g(pr.q, false);
    BigComplex G_qt = big_g(pr.qt, true);

    BigComplex root = exp((pr.log_q - pr.log_qt) / 24);
    BigComplex minus_i_half(BigReal(0, d), BigReal::from_string("-0.5", d));
    return minus_i_half * root * (pr.b * G_q * g_qt - pr.b_inv * G_qt * g_q);
}

BigComplex knot_52(const QContext& ctx, const BigReal& tol) {
    const int d = ctx.digits();
    const ModularPair& pr = ctx.pair();

    // q side: t_m(q) = q^{m(m+1)}/(q)_m^3 with p_1, p_2, p_3
    auto t_q = [&](long m) {
        return pow_int(pr.q, m * (m + 1)) / pow_int(qpochhammer(pr.q, pr.q, m), 3);
    };
    auto p1 = [&](long m) {
        BigComplex e1 = ctx.E_q(1, m), e2 = ctx.E_q(2, m);
        return BigComplex(1 + 4 * m + 4 * m * m, 0, d) - e1 * (6 + 12 * m) + e1 * e1 * 9 - e2 * 3;
    };
    auto p2 = [&](long m) { return BigComplex(1 + 2 * m, 0, d) - ctx.E_q(1, m) * 3; };
    auto unit = [&](long) { return BigComplex(1, 0, d); };

    BigComplex g1 = knot_sum(p1, t_q, tol, d, "knot_52 g1");
    BigComplex g2 = knot_sum(p2, t_q, tol, d, "knot_52 g2");
    BigComplex g3 = knot_sum(unit, t_q, tol, d, "knot_52 g3");

    // qt side: T_n(qt) = (-1)^n qt^{n(n+1)/2}/(qt)_n^3 with P_1, P_2, P_3
    auto t_qt = [&](long n) {
        BigComplex t = pow_int(pr.qt, n * (n + 1) / 2) / pow_int(qpochhammer(pr.qt, pr.qt, n), 3);
        return (n % 2 == 1) ? -t : t;
    };
    auto P2 = [&](long n) { return BigComplex(1 + 2 * n, 0, d) - ctx.E_qt(1, n) * 6; };
    auto P3 = [&](long n) {
        BigComplex e1 = ctx.E_qt(1, n), e2 = ctx.E_qt(2, n), e20 = ctx.E_qt(2, 0);
        return BigComplex(-n - n * n, 0, d) - e20 * 6 + e1 * (3 + 6 * n) - e1 * e1 * 9 + e2 * 3;
    };
    BigComplex G1 = knot_sum(unit, t_qt, tol, d, "knot_52 G1");
    BigComplex G2 = knot_sum(P2, t_qt, tol, d, "knot_52 G2");
    BigComplex G3 = knot_sum(P3, t_qt, tol, d, "knot_52 G3");

    const BigComplex pihat = inv_two_pi_i(d);
    BigComplex b2 = pr.b * pr.b;
    BigComplex bm2 = pr.b_inv * pr.b_inv;
    BigComplex combo = -(b2 * g1 * G1) / 2 - pihat * g3 * G1 + (g2 * G2) / 2 + (bm2 * g3 * G3) / 2;

    // Prefactor e^{pi i/4} (q/qt)^{1/8}: the (2,3) instance of
    // factorization_prefactor (e^{9 pi i/4} = e^{pi i/4}). A variant phase
    // -e^{3 pi i/4} sometimes quoted for this invariant is off by a factor
    // of i and disagrees with the contour integral.
    BigComplex root = exp((pr.log_q - pr.log_qt) / 8);
    BigComplex phase = exp(BigComplex(BigReal(0, d), BigReal::pi(d) / 4));
    return phase * root * combo;
}

}  // namespace qdilog
