#include "qdilog/contour.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "qdilog/errors.hpp"

namespace qdilog {

IntegralSpec make_integral_spec(long A, long B, const ModularPair& pair) {
    BigReal eps = pair.cb.im() / 2;
    BigReal tol = BigReal::pow10(-(pair.digits - kGuardDigits), pair.digits);
    return make_integral_spec(A, B, pair, eps, tol);
}

IntegralSpec make_integral_spec(long A, long B, const ModularPair& pair, const BigReal& epsilon,
                                const BigReal& target_tol) {
    IntegralSpec spec{A, B, pair, epsilon, target_tol, 16};
    validate(spec);
    return spec;
}

void validate(const IntegralSpec& spec) {
    if (!(spec.B > spec.A && spec.A > 0)) throw DomainError("integral: need B > A > 0");
    const int d = spec.pair.digits;
    BigReal im_cb = spec.pair.cb.im();
    if (!(im_cb > BigReal(0, d))) {
        throw DomainError("integral: Im(c_b) <= 0, contour regime needs b in the right half-plane");
    }
    if (!(spec.epsilon > BigReal(0, d)) || !(spec.epsilon < im_cb)) {
        throw DomainError("integral: epsilon must lie in (0, Im(c_b))");
    }
    // clearance between the contour and the pole lattice
    if (!(im_cb - spec.epsilon > default_pole_radius(spec.pair))) {
        throw DomainError("integral: contour too close to the pole lattice");
    }
    if (!(spec.target_tol > BigReal(0, d))) throw DomainError("integral: target_tol must be > 0");
}

BigComplex integrand(const BigComplex& x, const IntegralSpec& spec) {
    const int d = spec.pair.digits;
    BigComplex phi = phi_b(x, spec.pair);
    BigComplex quad = BigComplex(BigReal(0, d), -(BigReal::pi(d) * spec.A)) * x * x;
    return pow_int(phi, spec.B) * exp(quad);
}

namespace {

// integrand along the contour, parametrized by the real coordinate
class ContourFunction {
  public:
    explicit ContourFunction(const IntegralSpec& spec)
        : spec_(spec), d_(spec.pair.digits), i_eps_(BigReal(0, d_), spec.epsilon) {}

    BigComplex operator()(const BigReal& t) const {
        BigComplex x = BigComplex(t, BigReal(0, d_)) + i_eps_;
        BigComplex phi = phi_b_unchecked(x, spec_.pair);
        BigComplex quad = BigComplex(BigReal(0, d_), -(BigReal::pi(d_) * spec_.A)) * x * x;
        return pow_int(phi, spec_.B) * exp(quad);
    }

  private:
    const IntegralSpec& spec_;
    int d_;
    BigComplex i_eps_;
};

struct HalfResult {
    BigComplex value;
    BigReal last_diff;
    int levels;
    long evals;
};

// log10 of a positive BigReal, as a double (safe far outside double range)
double log10_of(const BigReal& x) {
    BigReal l(x.digits10());
    mpfr_log10(l.raw(), x.raw(), MPFR_RNDN);
    return l.to_double();
}

// tanh-sinh nodes for [a,b]: x = c + r tanh((pi/2) sinh(t)), weights
// r (pi/2) cosh(t) / cosh^2((pi/2) sinh(t)), summed over the grid t = j h.
class TanhSinh {
  public:
    TanhSinh(const IntegralSpec& spec, const ContourFunction& f) : spec_(spec), f_(f) {}

    HalfResult integrate(double a, double b, const BigReal& tol) {
        const int d = spec_.pair.digits;
        const BigReal half_pi = BigReal::pi(d) / 2;
        const BigReal c = (BigReal::from_double(a, d) + BigReal::from_double(b, d)) / 2;
        const BigReal r = (BigReal::from_double(b, d) - BigReal::from_double(a, d)) / 2;

        // level-0 grid range: far enough out that the double-exponential
        // weight factor alone is below tol * 1e-4. Computed in log10 space so
        // arbitrarily small tolerances (beyond double range) stay exact.
        const double tol_log10 = log10_of(tol);
        const double rd = (b - a) / 2;
        const double ln10 = 2.302585092994046;
        double t_max = 1.0;
        while (std::log10(rd * 1.5708 * std::cosh(t_max) * 4.0) -
                   3.14159265358979 * std::sinh(t_max) / ln10 >
               tol_log10 - 4.0) {
            t_max += 0.05;
            if (t_max > 12) break;
        }

        long evals = 0;
        auto node_sum = [&](double h, bool odd_only) {
            // deterministic assembly: values are computed (possibly in
            // parallel) into a fixed-index buffer, then summed in order
            std::vector<BigReal> ts;
            for (long j = static_cast<long>(-std::floor(t_max / h)); j * h <= t_max; ++j) {
                if (odd_only && (j % 2 == 0)) continue;
                ts.push_back(BigReal::from_double(j * h, d));
            }
            std::vector<BigComplex> vals(ts.size(), BigComplex(d));
            auto worker = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t k = lo; k < hi; ++k) {
                    BigReal u = half_pi * sinh_big(ts[k]);
                    BigReal sech = BigReal(1, d) / cosh_big(u);
                    BigReal x = c + r * tanh_big(u);
                    BigReal w = r * half_pi * cosh_big(ts[k]) * sech * sech;
                    vals[k] = f_(x) * w;
                }
            };
            if (ts.size() >= 512) {
                std::size_t mid = ts.size() / 2;
                std::thread th(worker, 0, mid);
                worker(mid, ts.size());
                th.join();
            } else {
                worker(0, ts.size());
            }
            evals += static_cast<long>(ts.size());
            BigComplex acc(0, 0, d);
            for (const auto& v : vals) acc += v;
            return acc;
        };

        double h = 1.0;
        BigComplex sum = node_sum(h, false) * BigReal::from_double(h, d);
        BigReal prev_diff = BigReal(1, d);
        for (int level = 1; level <= spec_.max_levels; ++level) {
            h /= 2;
            BigComplex refined = sum / 2 + node_sum(h, true) * BigReal::from_double(h, d);
            BigReal diff = abs(refined - sum);
            sum = refined;
            if (level >= 3 && diff < tol && prev_diff < sqrt(tol)) {
                return HalfResult{sum, diff, level, evals};
            }
            prev_diff = diff;
        }
        throw ConvergenceError(
            "state integral: quadrature did not reach tolerance within the level budget "
            "(precision or contour misconfiguration)");
    }

  private:
    static BigReal sinh_big(const BigReal& t) {
        BigReal out(t.digits10());
        mpfr_sinh(out.raw(), t.raw(), MPFR_RNDN);
        return out;
    }
    static BigReal cosh_big(const BigReal& t) {
        BigReal out(t.digits10());
        mpfr_cosh(out.raw(), t.raw(), MPFR_RNDN);
        return out;
    }
    static BigReal tanh_big(const BigReal& t) {
        BigReal out(t.digits10());
        mpfr_tanh(out.raw(), t.raw(), MPFR_RNDN);
        return out;
    }

    const IntegralSpec& spec_;
    const ContourFunction& f_;
};

// envelope sample near the candidate endpoint (three points dodge the zeros
// of the chirp)
BigReal endpoint_envelope(const ContourFunction& f, double x, int d) {
    BigReal m(0, d);
    for (double s : {1.0, 0.98, 0.96}) {
        m = max(m, abs(f(BigReal::from_double(x * s, d))));
    }
    return m;
}

double choose_truncation(const ContourFunction& f, double rate, const BigReal& tol, int sign,
                         int d) {
    double x = std::max(3.0, (-log10_of(tol) * 2.302585092994046 + 8.0) / rate);
    for (int iter = 0; iter < 80; ++iter) {
        BigReal thr = tol / ((BigReal::from_double(x, d) + BigReal(1, d)) * 10);
        if (endpoint_envelope(f, sign * x, d) < thr) return x;
        x *= 1.2;
    }
    throw ConvergenceError("state integral: could not certify a truncation point");
}

}  // namespace

IntegralResult evaluate_state_integral(const IntegralSpec& spec) {
    validate(spec);
    const int d = spec.pair.digits;
    ContourFunction f(spec);

    const double eps_d = spec.epsilon.to_double();
    const double pi_d = 3.14159265358979323846;
    const double rate_left = 2 * pi_d * spec.A * eps_d;
    const double rate_right = 2 * pi_d * (spec.B - spec.A) * eps_d;

    double x_left = choose_truncation(f, rate_left, spec.target_tol, -1, d);
    double x_right = choose_truncation(f, rate_right, spec.target_tol, +1, d);

    TanhSinh ts(spec, f);
    BigReal half_tol = spec.target_tol / 4;
    HalfResult left = ts.integrate(-x_left, 0.0, half_tol);
    HalfResult right = ts.integrate(0.0, x_right, half_tol);

    BigReal tail = endpoint_envelope(f, -x_left, d) / BigReal::from_double(rate_left, d) +
                   endpoint_envelope(f, x_right, d) / BigReal::from_double(rate_right, d);

    IntegralResult out;
    out.value = left.value + right.value;
    out.error_estimate = left.last_diff + right.last_diff + tail;
    out.levels_left = left.levels;
    out.levels_right = right.levels;
    out.evaluations = left.evals + right.evals;
    out.x_left = x_left;
    out.x_right = x_right;
    return out;
}

}  // namespace qdilog
