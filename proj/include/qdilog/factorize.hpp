#pragma once

#include "qdilog/qseries.hpp"
#include "qdilog/ring.hpp"

namespace qdilog {

// Numeric residue at w = 0 of
//   F_{A,B,m,n}(w) = e^{(A/(4 pi i)) w^2 + A w (b(m+1/2) + (n+1/2)/b)}
//                    (phi_m(bw) phitilde_n(w/b) / (b(1 - e^{w/b})))^B.
// extra_order pads the internal expansion; the residue is an exact Laurent
// coefficient, so any padding leaves it unchanged (up to roundoff).
BigComplex residue_rmn(long A, long B, long m, long n, const QContext& ctx,
                       std::size_t extra_order = 0);

// The scalar prefactor of the factorized form:
// (qt/q)^{(B-3A)/24} e^{pi i (B + 2(A+1))/4}, roots by the exponent convention.
BigComplex factorization_prefactor(long A, long B, const ModularPair& pair);

// The factorized series form of the state integral: prefactor times
// sum_{m,n} Res(F_{A,B,m,n}) t^A_m(q)/(q;q)_m^B * tt^A_n(qt)/(qt^{-1};qt^{-1})_n^B,
// summed by increasing m+n until the shell maxima certify the Gaussian tail.
BigComplex factorized_value(long A, long B, const QContext& ctx, const BigReal& tol);

// <p (F_{A,B}(q,x) Ft_{A,B}(qt,xt))>: evaluates the operator polynomial under
// the dictionary delta -> m, delta_l -> E_l^{(m)}(q), deltat -> n,
// deltat_l -> E_l^{(n)}(qt), b -> b, pihat -> (2 pi i)^{-1}, e_l -> e_l(qt),
// weighted by the coefficients of F_{A,B}(q,x) and F_{B-A,B}(qt,xt).
//
// The deltat_l substitution uses the plain Lambert sum at qt: that is the
// literal action of deltat_l on xt^n, and it is what makes the folded
// phitilde generating series reproduce the Taylor coefficients of
// phitilde_n (the case-split enters through the e_l factors there).
BigComplex bracket(const OperatorPolynomial& p, long A, long B, const QContext& ctx,
                   const BigReal& tol);

// Figure-eight knot invariant via its dedicated series pair
//   g(q) = sum (-1)^n q^{n(n+1)/2}/(q)_n^2,
//   G(q) = sum (1 + 2m - 4 E_1^{(m)}(q)) (-1)^m q^{m(m+1)/2}/(q)_m^2:
//   -(i/2) (q/qt)^{1/24} (b G(q) g(qt) - G(qt) g(q)/b).
BigComplex knot_41(const QContext& ctx, const BigReal& tol);

// 5_2 knot invariant via the four bilinear products of g_k(q), G_k(qt).
BigComplex knot_52(const QContext& ctx, const BigReal& tol);

}  // namespace qdilog
