#pragma once

#include "qdilog/faddeev.hpp"

namespace qdilog {

// Parameters of the state integral over the horizontal contour R + i*epsilon:
//   integral of Phi_b(x)^B e^{-A pi i x^2} dx,  B > A > 0.
// epsilon must stay strictly between 0 and Im(c_b) so the contour clears the
// pole lattice (every pole satisfies Im(x_{m,n}) >= Im(c_b)).
struct IntegralSpec {
    long A;
    long B;
    ModularPair pair;
    BigReal epsilon;
    BigReal target_tol;
    int max_levels = 16;
};

// Spec with the default contour height Im(c_b)/2 and tolerance 10^-(p-g).
IntegralSpec make_integral_spec(long A, long B, const ModularPair& pair);
IntegralSpec make_integral_spec(long A, long B, const ModularPair& pair, const BigReal& epsilon,
                                const BigReal& target_tol);

// Validates the invariants (throws DomainError if violated).
void validate(const IntegralSpec& spec);

// Phi_b(x)^B e^{-A pi i x^2} with the pole-proximity guard of phi_b.
BigComplex integrand(const BigComplex& x, const IntegralSpec& spec);

struct IntegralResult {
    BigComplex value;
    BigReal error_estimate;
    int levels_left = 0;
    int levels_right = 0;
    long evaluations = 0;
    double x_left = 0;   // truncation points actually used
    double x_right = 0;
};

// Evaluates the integral by splitting at 0 and applying tanh-sinh quadrature
// with adaptive level refinement on each truncated half-line. The truncation
// points are chosen so the integrand magnitude at the endpoints is below
// target_tol/(10(X+1)); the reported error estimate combines the last level
// difference on each side with the exponential tail bound.
IntegralResult evaluate_state_integral(const IntegralSpec& spec);

}  // namespace qdilog
