#pragma once

#include <random>
#include <string>

#include "qdilog/bigfloat.hpp"
#include "qdilog/modular.hpp"

namespace qdilog::testutil {

// r * exp(i*theta) at the given precision, with r/theta given as doubles
// (sample points only; the precision contract applies to the derived values).
inline BigComplex polar(double r, double theta_over_pi, int digits) {
    BigReal theta = BigReal::pi(digits) * BigReal::from_double(theta_over_pi, digits);
    BigReal rad = BigReal::from_double(r, digits);
    BigReal s(digits), c(digits);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return BigComplex(rad * c, rad * s);
}

inline ModularPair pair_from_polar(double r, double theta_over_pi, int digits) {
    return make_modular_pair(polar(r, theta_over_pi, digits), digits);
}

// 10^-e at working precision, for tolerance thresholds.
inline BigReal tol10(int e, int digits) { return BigReal::pow10(-e, digits); }

// Deterministic sample of b values in the upper-half b^2 plane, away from the
// |q| -> 1 boundaries (theta/pi in [1/8, 3/8], |b| in [0.85, 1.2]).
inline std::vector<BigComplex> sample_b_values(int count, int digits, unsigned seed = 20130403u) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.85, 1.2);
    std::uniform_real_distribution<double> ut(0.125, 0.375);
    std::vector<BigComplex> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double r = ur(rng);
        double t = ut(rng);
        out.push_back(polar(r, t, digits));
    }
    return out;
}

}  // namespace qdilog::testutil
