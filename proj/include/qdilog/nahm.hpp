#pragma once

#include "qdilog/qseries.hpp"
#include "qdilog/ring.hpp"

namespace qdilog {

// Puiseux solutions of the algebraic (Nahm / gluing) equation
//   (1 - omega(x))^B = (-1)^A x omega(x)^A,
// as series omega = 1 + sum_{k>=1} c_k u^k in u = x^{1/B}. The leading
// coefficient satisfies c_1^B = (-1)^{A+B} =: sigma; all coefficients live in
// the quotient ring Q[z]/(z^B - sigma) with c_1 = z, and each of the B
// embeddings z -> (B-th root of sigma) yields one branch.
struct NahmReport {
    long A = 0;
    long B = 0;
    int sigma = 1;
    std::size_t order = 0;
    // symbolic[k-1] represents c_k: coefficients over the basis 1, z, ...,
    // z^{B-1} of the quotient ring
    std::vector<std::vector<Rational>> symbolic;
    // defining equation verified exactly in the quotient ring through u^{B+order-1}
    bool residual_zero = false;
    // branches[j][k-1] = numeric c_k under the j-th embedding
    std::vector<std::vector<BigComplex>> branches;
};

NahmReport nahm_puiseux(long A, long B, std::size_t order, int digits);

}  // namespace qdilog
