#include "qdilog/report.hpp"

#include <chrono>

#include "qdilog/contour.hpp"
#include "qdilog/errors.hpp"
#include "qdilog/expr.hpp"
#include "qdilog/factorize.hpp"
#include "qdilog/wseries.hpp"

namespace qdilog {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["parameters"] = {
        {"A", A},
        {"B", B},
        {"b", b_expr},
        {"b_value", {{"re", b_re}, {"im", b_im}}},
        {"precision", precision},
        {"tol", tol},
        {"epsilon", epsilon},
        {"series_order", series_order},
    };
    j["values"] = {
        {"integral", {{"re", integral_re}, {"im", integral_im}}},
        {"integral_error_estimate", integral_error},
        {"factorized", {{"re", factorized_re}, {"im", factorized_im}}},
        {"bracket_pab", {{"re", bracket_re}, {"im", bracket_im}}},
    };
    j["discrepancies"] = {
        {"integral_vs_factorized", d_integral_factorized},
        {"integral_vs_bracket", d_integral_bracket},
        {"factorized_vs_bracket", d_factorized_bracket},
    };
    j["pass"] = pass;
    if (failed_stage) j["failed_stage"] = *failed_stage;
    j["timings_ms"] = {
        {"integral", ms_integral},
        {"factorized", ms_factorized},
        {"bracket", ms_bracket},
    };
    return j;
}

VerificationReport run_verification(long A, long B, const std::string& b_expr, int precision,
                                    const BigReal& tol,
                                    const std::optional<std::string>& epsilon_expr) {
    using Clock = std::chrono::steady_clock;
    auto ms_between = [](Clock::time_point a, Clock::time_point b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };

    if (!(B > A && A > 0)) throw DomainError("verify: B > A > 0 violated");

    VerificationReport rep;
    rep.A = A;
    rep.B = B;
    rep.b_expr = b_expr;
    rep.precision = precision;
    rep.tol = tol.to_string(3);

    BigComplex b = parse_complex_expr(b_expr, precision);
    ModularPair pair = make_modular_pair(b, precision);
    rep.b_re = pair.b.re().to_string();
    rep.b_im = pair.b.im().to_string();

    BigReal eps = pair.cb.im() / 2;
    if (epsilon_expr) {
        BigComplex e = parse_complex_expr(*epsilon_expr, precision);
        eps = e.re();
    }
    rep.epsilon = eps.to_string();

    QContext ctx(pair);
    // inner tolerance: somewhat tighter than the pass threshold
    BigReal inner_tol = tol / 1000;

    try {
        rep.failed_stage = "integral";
        auto t0 = Clock::now();
        IntegralSpec spec = make_integral_spec(A, B, pair, eps, inner_tol);
        IntegralResult integral = evaluate_state_integral(spec);
        auto t1 = Clock::now();
        rep.ms_integral = ms_between(t0, t1);
        rep.integral_re = integral.value.re().to_string();
        rep.integral_im = integral.value.im().to_string();
        rep.integral_error = integral.error_estimate.to_string(3);

        rep.failed_stage = "factorized";
        BigComplex fact = factorized_value(A, B, ctx, inner_tol);
        auto t2 = Clock::now();
        rep.ms_factorized = ms_between(t1, t2);
        rep.factorized_re = fact.re().to_string();
        rep.factorized_im = fact.im().to_string();

        rep.failed_stage = "bracket";
        BigComplex brk = bracket(compute_pab(A, B), A, B, ctx, inner_tol) *
                         factorization_prefactor(A, B, pair);
        auto t3 = Clock::now();
        rep.ms_bracket = ms_between(t2, t3);
        rep.bracket_re = brk.re().to_string();
        rep.bracket_im = brk.im().to_string();

        BigReal d_if = rel_diff(integral.value, fact);
        BigReal d_ib = rel_diff(integral.value, brk);
        BigReal d_fb = rel_diff(fact, brk);
        rep.d_integral_factorized = d_if.to_string(3);
        rep.d_integral_bracket = d_ib.to_string(3);
        rep.d_factorized_bracket = d_fb.to_string(3);
        rep.pass = d_if < tol && d_ib < tol && d_fb < tol;
        rep.failed_stage.reset();
    } catch (const Error& e) {
        rep.pass = false;
        rep.failed_stage = *rep.failed_stage + ": " + e.what();
    }
    return rep;
}

}  // namespace qdilog
