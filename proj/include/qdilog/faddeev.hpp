#pragma once

#include <utility>

#include "qdilog/modular.hpp"

namespace qdilog {

// Index (m, n) of the pole x_{m,n} = c_b + i b m + i n / b of Phi_b.
struct PoleIndex {
    long m = 0;
    long n = 0;
};

BigComplex pole_location(const PoleIndex& idx, const ModularPair& pair);

// Closest pole of Phi_b to x, found by scanning a lattice window sized from
// |x - c_b|; returns the index and the exact distance.
std::pair<PoleIndex, BigReal> nearest_pole(const BigComplex& x, const ModularPair& pair);

// Default pole-exclusion radius: 1e-3 * |b|.
BigReal default_pole_radius(const ModularPair& pair);

// Faddeev's quantum dilogarithm via the product formula
//   Phi_b(x) = (e^{2 pi b (x+c_b)}; q)_inf / (e^{2 pi (x-c_b)/b}; qt)_inf,
// valid for Im(b^2) > 0. Throws PoleProximityError when x is closer than the
// exclusion radius to a pole.
BigComplex phi_b(const BigComplex& x, const ModularPair& pair);
BigComplex phi_b(const BigComplex& x, const ModularPair& pair, const BigReal& exclusion_radius);

// Product-formula evaluation without the pole-distance scan. Callers must
// guarantee clearance themselves (the contour integrator proves it once for
// the whole contour).
BigComplex phi_b_unchecked(const BigComplex& x, const ModularPair& pair);

// Closed form of Phi_b(0), whose square q^{1/24} qt^{-1/24} is the constant
// in the inversion relation Phi_b(x) Phi_b(-x) = e^{pi i x^2} Phi_b(0)^2.
// Roots follow the exponent convention of ModularPair.
BigComplex phi_b_zero_closed_form(const ModularPair& pair);

// Residuals of the two shift relations obtained from the product formula:
//   Phi_b(x+c_b+ib)   / Phi_b(x+c_b) = 1/(1 - q e^{2 pi b x})
//   Phi_b(x+c_b+i/b)  / Phi_b(x+c_b) = 1/(1 - e^{2 pi x / b} / qt)
// Returns (residual_b, residual_binv) as relative differences.
std::pair<BigReal, BigReal> shift_check(const BigComplex& x, const ModularPair& pair);

}  // namespace qdilog
