#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace qdilog {

// Fixed guard-digit count g: a value carrying p significant digits is trusted
// to relative accuracy 10^-(p-g) after any documented chain of operations.
// All tolerance contracts in this library are quoted as 10^-(p-g).
inline constexpr int kGuardDigits = 10;

mpfr_prec_t bits_for_digits(int digits10);

// Arbitrary-precision real number with an explicit precision contract in
// significant decimal digits. Binary operations produce a result carrying the
// minimum of the operand precisions. Rounding is to nearest throughout.
class BigReal {
  public:
    explicit BigReal(int digits10 = 2);
    BigReal(long value, int digits10);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_string(std::string_view text, int digits10);
    static BigReal from_double(double value, int digits10);
    static BigReal pi(int digits10);
    // 10^e at the given precision (exact for moderate |e|).
    static BigReal pow10(long e, int digits10);

    int digits10() const { return digits_; }
    // Reduces the carried precision (no-op when digits10 >= current).
    BigReal& narrow_to(int digits10);
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with out_digits significant digits (default: the carried
    // precision). Format is mantissa/exponent, deterministic for fixed input.
    std::string to_string(int out_digits = -1) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);
    BigReal& operator*=(long rhs);
    BigReal& operator/=(long rhs);

    friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
    friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
    friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
    friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
    friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend BigReal abs(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal exp(const BigReal& x);
    friend BigReal log(const BigReal& x);
    friend BigReal sin(const BigReal& x);
    friend BigReal cos(const BigReal& x);
    friend BigReal atan2(const BigReal& y, const BigReal& x);
    friend BigReal hypot(const BigReal& x, const BigReal& y);
    friend BigReal pow_int(const BigReal& x, long e);
    friend BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
    friend BigReal max(const BigReal& a, const BigReal& b) { return a > b ? a : b; }

  private:
    mpfr_t v_;
    int digits_;
};

// Complex number over BigReal. Both parts always carry the same precision;
// mixed-precision construction narrows to the smaller of the two.
class BigComplex {
  public:
    explicit BigComplex(int digits10 = 2) : re_(digits10), im_(digits10) {}
    BigComplex(long re, long im, int digits10) : re_(re, digits10), im_(im, digits10) {}
    BigComplex(BigReal re, BigReal im);
    explicit BigComplex(BigReal re);

    static BigComplex i(int digits10) { return BigComplex(0, 1, digits10); }

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    int digits10() const { return re_.digits10(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex conj() const;
    BigComplex operator-() const;
    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);
    BigComplex& operator*=(const BigReal& rhs);
    BigComplex& operator/=(const BigReal& rhs);
    BigComplex& operator*=(long rhs);
    BigComplex& operator/=(long rhs);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend BigReal abs(const BigComplex& z) { return hypot(z.re_, z.im_); }
    friend BigComplex exp(const BigComplex& z);
    friend BigComplex log(const BigComplex& z);  // principal branch
    friend BigComplex pow_int(const BigComplex& z, long e);

    std::string to_string(int out_digits = -1) const;

  private:
    BigReal re_;
    BigReal im_;
};

// Relative distance |a-b| / max(|a|, |b|, tiny); absolute distance when both
// magnitudes are below 1.
BigReal rel_diff(const BigComplex& a, const BigComplex& b);

}  // namespace qdilog
