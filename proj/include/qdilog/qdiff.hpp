#pragma once

#include "qdilog/qseries.hpp"
#include "qdilog/ring.hpp"

namespace qdilog {

// Exact coefficients t(m) of F_{A,B}(q0, x) at a rational base, built straight
// from the definition (fresh Pochhammer product per coefficient). q0 may lie
// outside (0,1) (the reflection test evaluates at 1/q0).
std::vector<Rational> f_ab_rational_coeffs(long A, long B, const Rational& q0,
                                           std::size_t order);

// Exact test of F_{A,B}(q0^{-1}, x) = F_{B-A,B}(q0, x) through x^order.
bool check_reflection(long A, long B, const Rational& q0, std::size_t order);

// Residual of the linear q-difference equation
//   ((1 - E)^B - (-1)^A q^A x E^A) F_{A,B}(q, x) = 0,
// applied to the truncated series; maximum coefficient magnitude over powers
// <= order - A.
BigReal check_linear_qdiff(long A, long B, const BigComplex& q, std::size_t order);

// Residual of the nonlinear relation for omega(q,x) = F(q,qx)/F(q,x):
//   sum_{j=0}^B (-1)^j C(B,j) omega_j - (-1)^A q^A x omega_A = 0,
// where omega_j = prod_{i=0}^{j-1} omega(q, q^i x) = F(q, q^j x)/F(q, x)
// (the products are formed explicitly from shifted copies of omega).
BigReal omega_nonlinear_residual(long A, long B, const BigComplex& q, std::size_t order);

// omega(q, x) itself as a truncated series (division valid: constant term 1).
XSeries omega_series(long A, long B, const BigComplex& q, std::size_t order);

// Exact certificate of the two term-level recursions behind the telescoping
// derivation: (1-q^{m+1})^B t(m+1) = (-1)^A q^{A(m+1)} t(m) for m < m_max,
// and the x-shift law t(m, qx) = q^m t(m, x) on the series built from them.
bool telescoping_certificate(long A, long B, const Rational& q0, long m_max);

}  // namespace qdilog
