#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdilog/bigfloat.hpp"

namespace qdilog {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

BigReal to_bigreal(const Rational& r, int digits);
Rational rational_pow(const Rational& base, long e);
Integer binomial(long n, long k);

// Generators of the commutative coefficient ring for operator polynomials:
//   delta, delta_1, delta_2, ..., deltat, deltat_1, ...,
//   b (integer exponent, negative allowed), pihat := (2 pi i)^{-1},
//   e_2, e_4, ... (even index).
// The enum order fixes the canonical total order on generators.
enum class GenKind : std::uint8_t {
    Delta = 0,
    DeltaL = 1,
    DeltaT = 2,
    DeltaTL = 3,
    B = 4,
    PiHat = 5,
    E = 6,
};

using GenId = std::uint32_t;  // (kind << 16) | index

constexpr GenId make_gen(GenKind kind, unsigned index = 0) {
    return (static_cast<GenId>(kind) << 16) | index;
}
constexpr GenKind gen_kind(GenId g) { return static_cast<GenKind>(g >> 16); }
constexpr unsigned gen_index(GenId g) { return g & 0xffffu; }

constexpr GenId gen_delta() { return make_gen(GenKind::Delta); }
constexpr GenId gen_delta_l(unsigned l) { return make_gen(GenKind::DeltaL, l); }
constexpr GenId gen_deltat() { return make_gen(GenKind::DeltaT); }
constexpr GenId gen_deltat_l(unsigned l) { return make_gen(GenKind::DeltaTL, l); }
constexpr GenId gen_b() { return make_gen(GenKind::B); }
constexpr GenId gen_pihat() { return make_gen(GenKind::PiHat); }
constexpr GenId gen_e(unsigned l) { return make_gen(GenKind::E, l); }

std::string gen_name(GenId g);

// Product of generator powers. Factors are sorted by generator id and carry
// nonzero exponents; only b may carry a negative exponent (b and b^{-1} share
// one slot, so b * b^{-1} reduces to 1 automatically).
struct Monomial {
    std::vector<std::pair<GenId, int>> factors;

    static Monomial one() { return {}; }
    static Monomial gen(GenId g, int e = 1);

    bool is_one() const { return factors.empty(); }
    int exponent(GenId g) const;
    Monomial times(const Monomial& other) const;

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors < b.factors; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
};

// Element of the polynomial ring Q[delta, delta_l, deltat, deltat_l, b^{+-1},
// pihat, e_l]: a sparse map from monomials to exact rational coefficients.
// Zero coefficients are never stored, which makes equality structural.
class OperatorPolynomial {
  public:
    OperatorPolynomial() = default;
    explicit OperatorPolynomial(const Rational& c);
    explicit OperatorPolynomial(long c);
    static OperatorPolynomial gen(GenId g, int e = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    OperatorPolynomial operator-() const;
    OperatorPolynomial& operator+=(const OperatorPolynomial& rhs);
    OperatorPolynomial& operator-=(const OperatorPolynomial& rhs);
    OperatorPolynomial operator*(const OperatorPolynomial& rhs) const;
    OperatorPolynomial& operator*=(const OperatorPolynomial& rhs);
    OperatorPolynomial& operator*=(const Rational& c);

    friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) {
        return a += b;
    }
    friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) {
        return a -= b;
    }
    friend OperatorPolynomial operator*(OperatorPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    OperatorPolynomial pow(unsigned e) const;

    // Replaces every occurrence of generator g by the given polynomial
    // (g must not carry negative exponents anywhere, i.e. g != b).
    OperatorPolynomial substitute(GenId g, const OperatorPolynomial& value) const;

    // Exchanges delta <-> deltat and delta_l <-> deltat_l (b, pihat, e_l fixed).
    OperatorPolynomial swap_tilde() const;

    // Canonical text: terms in monomial order, exact rational coefficients.
    std::string to_string() const;

  private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace qdilog
