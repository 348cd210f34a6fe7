#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qdilog/modular.hpp"

namespace qdilog {

// ---- dense truncated power-series helpers (coefficients in x) ----

using Coeffs = std::vector<BigComplex>;

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::size_t order, int digits);
// exp of a series with zero constant term
Coeffs poly_exp(const Coeffs& a, std::size_t order, int digits);
// inverse of a series with nonzero constant term
Coeffs poly_inv(const Coeffs& a, std::size_t order, int digits);

// ---- Lambert-type q-series ----

// E_l^{(m)}(q) = sum_{s>=1} s^{l-1} q^{s(m+1)} / (1 - q^s), |q| < 1.
BigComplex e_series(long l, long m, const BigComplex& q, const BigReal& tol);

// E_{l,r}^{(m)}(q) = sum_{k=m+1}^inf q^{k r} / (1 - q^k)^l, |q| < 1, l >= r >= 1.
BigComplex e_lr_series(long l, long r, long m, const BigComplex& q, const BigReal& tol);

// Et_l^{(n)}(qt): -n + E_1 for l = 1; E_l for odd l > 1; 2 E_l^{(0)} - E_l^{(n)}
// for even l.
BigComplex e_tilde(long l, long n, const BigComplex& qt, const BigReal& tol);

// E_{l,r}^{[n]}(q) = sum_{k=1}^n q^{k r} / (1 - q^k)^l (finite, any q off the
// unit-root set; used with q = qt^{-1}).
BigComplex e_bracket(long l, long r, long n, const BigComplex& q);

// Memoizing evaluation context bound to one modular pair. Thread-safe:
// the memo table accepts idempotent concurrent inserts.
class QContext {
  public:
    explicit QContext(ModularPair pair);
    QContext(ModularPair pair, BigReal tol);

    const ModularPair& pair() const { return pair_; }
    const BigReal& tol() const { return tol_; }
    int digits() const { return pair_.digits; }

    BigComplex E_q(long l, long m) const;    // E_l^{(m)}(q)
    BigComplex E_qt(long l, long n) const;   // E_l^{(n)}(qt)
    BigComplex Et_qt(long l, long n) const;  // Et_l^{(n)}(qt)
    BigComplex e_l(long l) const;            // e_l(qt) = E_l^{(0)}(qt)

  private:
    BigComplex cached(int kind, long l, long m) const;

    ModularPair pair_;
    BigReal tol_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, long, long>, BigComplex> memo_;
};

// ---- the generating series F_{A,B} and the delta operators ----

// Truncated power series in x with BigComplex coefficients and its base q.
struct XSeries {
    Coeffs c;
    BigComplex q;

    std::size_t order() const { return c.empty() ? 0 : c.size() - 1; }
    int digits() const { return q.digits10(); }
    // <F> = F(1) = sum of retained coefficients
    BigComplex at_one() const;
    // substitute x -> q^j x
    XSeries shift_q(long j) const;
};

// F_{A,B}(q, x) = sum_m (-1)^{Am} q^{A m(m+1)/2} / (q;q)_m^B x^m through x^order.
XSeries f_ab_series(long A, long B, const BigComplex& q, std::size_t order);

// Single coefficient t(m) of F_{A,B}(q, x).
BigComplex f_ab_coeff(long A, long B, long m, const BigComplex& q);

// delta = x d/dx: multiplies coefficient m by m.
XSeries delta_action(const XSeries& s);

// delta_k via the coefficient-wise closed form E_k^{(m)}(q).
XSeries delta_k_action(const XSeries& s, long k, const BigReal& tail_tol);

// delta_k via the defining sum sum_s s^{k-1} q^s/(1-q^s) F(q^s x); the
// independent route used to cross-check the closed form.
XSeries delta_k_action_direct(const XSeries& s, long k, const BigReal& tail_tol);

// ---- Taylor series of phi_m and phitilde_n ----

// exp-of-E route: phi_m(x) = exp(-sum_l E_l^{(m)}(q) x^l / l!).
Coeffs phi_m_taylor_expE(long m, const BigComplex& q, std::size_t order, const BigReal& tol);
// direct expansion of (q^{m+1} e^x; q)_inf / (q^{m+1}; q)_inf.
Coeffs phi_m_taylor_product(long m, const BigComplex& q, std::size_t order, const BigReal& tol);

// exp-of-E route: phitilde_n(x) = exp(+sum_l Et_l^{(n)}(qt) x^l / l!).
Coeffs phitilde_n_taylor_expE(long n, const BigComplex& qt, std::size_t order, const BigReal& tol);
// direct expansion of the defining Pochhammer ratio.
Coeffs phitilde_n_taylor_product(long n, const BigComplex& qt, std::size_t order,
                                 const BigReal& tol);

// Point evaluations through the defining products.
BigComplex phi_m_value(long m, const BigComplex& z, const ModularPair& pair);
BigComplex phitilde_n_value(long n, const BigComplex& z, const ModularPair& pair);

}  // namespace qdilog
