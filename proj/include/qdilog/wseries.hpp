#pragma once

#include "qdilog/ring.hpp"

namespace qdilog {

// Truncated Laurent series in the residue variable w with OperatorPolynomial
// coefficients: powers run from -pole_order to trunc_order inclusive.
// Multiplication tracks validity pessimistically: the product of series valid
// to orders t1, t2 with poles p1, p2 is valid to min(t1 - p2, t2 - p1).
class LaurentSeriesW {
  public:
    LaurentSeriesW(int pole_order, int trunc_order);

    static LaurentSeriesW zero(int trunc_order) { return LaurentSeriesW(0, trunc_order); }
    static LaurentSeriesW constant(const OperatorPolynomial& c, int trunc_order);

    int pole_order() const { return pole_order_; }
    int trunc_order() const { return trunc_order_; }

    const OperatorPolynomial& coeff(int power) const;
    void set_coeff(int power, OperatorPolynomial c);

    // Drops vanishing leading (most negative) powers from the pole bookkeeping.
    void normalize();

    LaurentSeriesW& operator+=(const LaurentSeriesW& rhs);
    friend LaurentSeriesW operator+(LaurentSeriesW a, const LaurentSeriesW& b) { return a += b; }
    LaurentSeriesW operator*(const LaurentSeriesW& rhs) const;
    LaurentSeriesW& operator*=(const OperatorPolynomial& c);

    // w^k * this (k may be negative; pole bookkeeping follows).
    LaurentSeriesW shifted(int k) const;

    // Integer power by repeated multiplication (e >= 0).
    LaurentSeriesW pow(unsigned e) const;

    // exp of a series with no pole part and zero constant coefficient; exact
    // to the truncation order via the finite partial sum of exp.
    LaurentSeriesW exp_series() const;

    // Multiplicative inverse of a series with unit leading structure: no pole
    // part and constant coefficient equal to a nonzero rational.
    LaurentSeriesW inverse() const;

    // Coefficient of w^{-1}.
    OperatorPolynomial residue() const;

  private:
    int pole_order_;
    int trunc_order_;
    std::vector<OperatorPolynomial> coeffs_;  // index i <-> power i - pole_order_
};

// Laurent expansion of (b (1 - e^{w/b}))^{-B}, pole order exactly B, valid
// through power `order` - B; requires order >= B.
LaurentSeriesW one_minus_exp_inverse(long B, int order);

// phi(w, delta_*) = exp(-sum_{l>=1} delta_l w^l / l!) through w^order.
LaurentSeriesW phi_delta_series(int order);

// phitilde(w, deltat_*) = exp(-deltat w) exp(2 sum_{even l} e_l w^l / l!)
//                         exp(-sum_{l>=1} deltat_l (-w)^l / l!).
LaurentSeriesW phitilde_delta_series(int order);

// The operator polynomial P_{A,B}: residue at w = 0 of
//   exp((A/(4 pi i)) w^2 + A w (b (delta + 1/2) + (deltat + 1/2)/b))
//   * (phi(bw) phitilde(w/b) / (b (1 - e^{w/b})))^B
// with (4 pi i)^{-1} entering through the generator pihat = (2 pi i)^{-1}.
OperatorPolynomial compute_pab(long A, long B);

// Literal equality test of P_{A,B} and P_{B-A,B} (no generator relabeling).
bool pab_symmetry_check(long A, long B);

// Degree data used by the structural checks: max weighted e-degree (deg e_l =
// l) and the set of b-exponents present.
struct PabDegrees {
    int e_weighted_degree;
    std::vector<int> b_exponents;  // sorted, deduplicated
};
PabDegrees pab_degrees(const OperatorPolynomial& p);

}  // namespace qdilog
