#include "qdilog/bigfloat.hpp"

#include <cmath>
#include <cstdlib>

#include "qdilog/errors.hpp"

namespace qdilog {

mpfr_prec_t bits_for_digits(int digits10) {
    if (digits10 < 2) digits10 = 2;
    // log2(10) = 3.3219..., plus slack so that p decimal digits round-trip.
    return static_cast<mpfr_prec_t>(digits10 * 3.3219280948873623 + 8.0);
}

BigReal::BigReal(int digits10) : digits_(digits10 < 2 ? 2 : digits10) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, int digits10) : digits_(digits10 < 2 ? 2 : digits10) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        digits_ = other.digits_;
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(std::string_view text, int digits10) {
    BigReal r(digits10);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("cannot parse decimal number: '" + s + "'");
    }
    return r;
}

BigReal BigReal::from_double(double value, int digits10) {
    BigReal r(digits10);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(int digits10) {
    BigReal r(digits10);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow10(long e, int digits10) {
    BigReal r(digits10);
    mpfr_set_ui(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

BigReal& BigReal::narrow_to(int digits10) {
    if (digits10 >= 2 && digits10 < digits_) {
        digits_ = digits10;
        mpfr_prec_round(v_, bits_for_digits(digits_), MPFR_RNDN);
    }
    return *this;
}

std::string BigReal::to_string(int out_digits) const {
    if (out_digits <= 0) out_digits = digits_;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(out_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr exponent convention: value = 0.digits * 10^e.
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
    narrow_to(rhs.digits_);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    narrow_to(rhs.digits_);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    narrow_to(rhs.digits_);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    narrow_to(rhs.digits_);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(long rhs) {
    mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(long rhs) {
    mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

#define QDILOG_UNARY_FN(name, mpfr_fn)          \
    BigReal name(const BigReal& x) {            \
        BigReal r(x.digits_);                   \
        mpfr_fn(r.v_, x.v_, MPFR_RNDN);         \
        return r;                               \
    }

QDILOG_UNARY_FN(abs, mpfr_abs)
QDILOG_UNARY_FN(sqrt, mpfr_sqrt)
QDILOG_UNARY_FN(exp, mpfr_exp)
QDILOG_UNARY_FN(log, mpfr_log)
QDILOG_UNARY_FN(sin, mpfr_sin)
QDILOG_UNARY_FN(cos, mpfr_cos)

#undef QDILOG_UNARY_FN

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(y.digits_ < x.digits_ ? y.digits_ : x.digits_);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r(y.digits_ < x.digits_ ? y.digits_ : x.digits_);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigReal pow_int(const BigReal& x, long e) {
    BigReal r(x.digits_);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    const int d = re_.digits10() < im_.digits10() ? re_.digits10() : im_.digits10();
    re_.narrow_to(d);
    im_.narrow_to(d);
}

BigComplex::BigComplex(BigReal re) : re_(std::move(re)), im_(0, re_.digits10()) {}

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigReal ac = re_ * rhs.re_;
    BigReal bd = im_ * rhs.im_;
    BigReal ad = re_ * rhs.im_;
    BigReal bc = im_ * rhs.re_;
    re_ = ac - bd;
    im_ = ad + bc;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    BigReal n = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    BigReal ac = re_ * rhs.re_;
    BigReal bd = im_ * rhs.im_;
    BigReal bc = im_ * rhs.re_;
    BigReal ad = re_ * rhs.im_;
    re_ = (ac + bd) / n;
    im_ = (bc - ad) / n;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
    re_ /= rhs;
    im_ /= rhs;
    return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

BigComplex& BigComplex::operator/=(long rhs) {
    re_ /= rhs;
    im_ /= rhs;
    return *this;
}

BigComplex exp(const BigComplex& z) {
    const int d = z.digits10();
    BigReal r = exp(z.re());
    BigReal s(d), c(d);
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return BigComplex(r * c, r * s);
}

BigComplex log(const BigComplex& z) {
    return BigComplex(log(abs(z)), atan2(z.im(), z.re()));
}

BigComplex pow_int(const BigComplex& z, long e) {
    const int d = z.digits10();
    if (e == 0) return BigComplex(1, 0, d);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    BigComplex base = z;
    BigComplex acc(1, 0, d);
    while (k > 0) {
        if (k & 1ul) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    if (invert) {
        BigComplex one(1, 0, d);
        acc = one / acc;
    }
    return acc;
}

std::string BigComplex::to_string(int out_digits) const {
    return "(" + re_.to_string(out_digits) + ", " + im_.to_string(out_digits) + ")";
}

BigReal rel_diff(const BigComplex& a, const BigComplex& b) {
    BigReal d = abs(a - b);
    BigReal scale = max(abs(a), abs(b));
    if (scale > BigReal(1, scale.digits10())) d /= scale;
    return d;
}

}  // namespace qdilog
