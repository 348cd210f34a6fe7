#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdilog/errors.hpp"
#include "qdilog/faddeev.hpp"
#include "test_util.hpp"

using namespace qdilog;
using namespace qdilog::testutil;

namespace {
constexpr int P = 40;

BigComplex inversion_rhs(const BigComplex& x, const ModularPair& p) {
    BigComplex phi0 = phi_b_zero_closed_form(p);
    BigComplex ipix2 = BigComplex(BigReal(0, p.digits), BigReal::pi(p.digits)) * x * x;
    return exp(ipix2) * phi0 * phi0;
}
}  // namespace

TEST_CASE("phi_b(0): square equals q^{1/24} qt^{-1/24}") {
    for (double t : {0.25, 1.0 / 3.0, 0.2}) {
        ModularPair p = pair_from_polar(t == 0.2 ? 1.1 : 1.0, t, P);
        BigComplex lhs = phi_b(BigComplex(0, 0, P), p);
        CHECK(rel_diff(lhs, phi_b_zero_closed_form(p)) < tol10(P - kGuardDigits, P));
        // the inversion constant: phi_b(0)^2 = q^{1/24} qt^{-1/24}
        BigComplex root24 = exp((p.log_q - p.log_qt) / 24);
        CHECK(rel_diff(lhs * lhs, root24) < tol10(P - kGuardDigits, P));
    }
    // at b = exp(i pi/4), q = qt so phi_b(0) = 1
    ModularPair p4 = pair_from_polar(1.0, 0.25, P);
    CHECK(abs(phi_b(BigComplex(0, 0, P), p4) - BigComplex(1, 0, P)) < tol10(P - kGuardDigits, P));
}

TEST_CASE("inversion relation at a fixed point") {
    ModularPair p = pair_from_polar(1.0, 0.25, P);
    BigComplex x = BigComplex(BigReal::from_string("0.3", P), BigReal::from_string("0.1", P));
    BigComplex lhs = phi_b(x, p) * phi_b(-x, p);
    CHECK(rel_diff(lhs, inversion_rhs(x, p)) < tol10(P - kGuardDigits, P));
}

TEST_CASE("inversion relation over 20 random x in the unit disk") {
    ModularPair p = pair_from_polar(1.0, 1.0 / 3.0, P);
    BigReal radius = default_pole_radius(p);
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 20) {
        BigComplex x(BigReal::from_double(u(rng), P), BigReal::from_double(u(rng), P));
        auto near = nearest_pole(x, p);
        if (!(near.second > radius * 10)) continue;  // keep clear of poles on both sides
        auto near_neg = nearest_pole(-x, p);
        if (!(near_neg.second > radius * 10)) continue;
        ++tested;
        BigComplex lhs = phi_b(x, p) * phi_b(-x, p);
        CHECK(rel_diff(lhs, inversion_rhs(x, p)) < tol10(P - kGuardDigits, P));
    }
}

TEST_CASE("shift relations") {
    {
        ModularPair p = pair_from_polar(1.0, 0.25, P);
        auto [rb, rbi] = shift_check(BigComplex(BigReal::from_string("0.2", P), BigReal(0, P)), p);
        CHECK(rb < tol10(30, P));
        CHECK(rbi < tol10(30, P));
    }
    {
        ModularPair p = pair_from_polar(1.0, 1.0 / 3.0, P);
        auto [rb, rbi] = shift_check(BigComplex(BigReal(0, P), BigReal::from_string("0.5", P)), p);
        CHECK(rb < tol10(P - kGuardDigits, P));
        CHECK(rbi < tol10(P - kGuardDigits, P));
    }
    // both shift relations on the random sample used for inversion
    ModularPair p = pair_from_polar(1.0, 1.0 / 3.0, P);
    BigReal radius = default_pole_radius(p);
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 20) {
        BigComplex x(BigReal::from_double(u(rng), P), BigReal::from_double(u(rng), P));
        bool clear = true;
        const BigComplex i = BigComplex::i(P);
        for (const BigComplex& pt :
             {x + p.cb, x + p.cb + i * p.b, x + p.cb + i * p.b_inv}) {
            if (!(nearest_pole(pt, p).second > radius * 10)) clear = false;
        }
        if (!clear) continue;
        ++tested;
        auto [rb, rbi] = shift_check(x, p);
        CHECK(rb < tol10(P - kGuardDigits, P));
        CHECK(rbi < tol10(P - kGuardDigits, P));
    }
}

TEST_CASE("pole proximity raises with the offending index") {
    ModularPair p = pair_from_polar(1.0, 0.25, P);
    CHECK_THROWS_AS(phi_b(p.cb, p), PoleProximityError);
    try {
        const BigComplex i = BigComplex::i(P);
        phi_b(p.cb + i * p.b, p);
        FAIL("expected PoleProximityError");
    } catch (const PoleProximityError& e) {
        CHECK(e.m == 1);
        CHECK(e.n == 0);
    }
    // degenerate shift: base point x + c_b lands on the (1,0) pole
    const BigComplex i = BigComplex::i(P);
    CHECK_THROWS_AS(shift_check(i * p.b, p), PoleProximityError);
}

TEST_CASE("nearest pole at and near lattice points") {
    ModularPair p = pair_from_polar(1.0, 0.25, P);
    {
        auto [idx, dist] = nearest_pole(p.cb, p);
        CHECK(idx.m == 0);
        CHECK(idx.n == 0);
        CHECK(dist < tol10(P - 2, P));
    }
    {
        const BigComplex i = BigComplex::i(P);
        auto [idx, dist] = nearest_pole(p.cb + i * p.b, p);
        CHECK(((idx.m == 1 && idx.n == 0) || (idx.m == 0 && idx.n == 1)));  // b = 1/b here
        CHECK(dist < tol10(P - 2, P));
    }
    {
        auto [idx, dist] = nearest_pole(BigComplex(0, 0, P), p);
        CHECK(idx.m == 0);
        CHECK(idx.n == 0);
        CHECK(abs(dist - abs(p.cb)) < tol10(P - kGuardDigits, P));
    }
    // asymmetric b: lattice directions differ
    ModularPair pa = pair_from_polar(1.1, 0.2, P);
    const BigComplex i = BigComplex::i(P);
    auto [idx, dist] = nearest_pole(pa.cb + i * pa.b_inv, pa);
    CHECK(idx.m == 0);
    CHECK(idx.n == 1);
    CHECK(dist < tol10(P - 2, P));
}

TEST_CASE("phi_b tends to 1 towards -infinity on the real axis") {
    ModularPair p = pair_from_polar(1.0, 0.25, P);
    BigComplex one(1, 0, P);
    BigReal d4 = abs(phi_b(BigComplex(-4, 0, P), p) - one);
    BigReal d8 = abs(phi_b(BigComplex(-8, 0, P), p) - one);
    BigReal d12 = abs(phi_b(BigComplex(-12, 0, P), p) - one);
    CHECK(d8 < d4);
    CHECK(d12 < d8);
    CHECK(d12 < tol10(20, P));
}
