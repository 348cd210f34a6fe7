#pragma once

#include <json.hpp>  // vendored single-header nlohmann/json

#include <optional>
#include <string>

#include "qdilog/bigfloat.hpp"

namespace qdilog {

// Central defaults shared by the CLI surface.
struct Defaults {
    static constexpr int precision = 40;
    static constexpr int tol_exponent = 25;  // tolerance 10^-25
    static constexpr int series_order = 16;
};

// Machine-readable outcome of one verification point: the contour
// integral against both factorized right-hand-side routes.
struct VerificationReport {
    static constexpr const char* kSchemaVersion = "1";

    long A = 0;
    long B = 0;
    std::string b_expr;
    int precision = Defaults::precision;
    std::string tol;
    std::string epsilon;
    int series_order = Defaults::series_order;

    std::string b_re, b_im;
    std::string integral_re, integral_im, integral_error;
    std::string factorized_re, factorized_im;
    std::string bracket_re, bracket_im;

    std::string d_integral_factorized;
    std::string d_integral_bracket;
    std::string d_factorized_bracket;

    bool pass = false;
    std::optional<std::string> failed_stage;  // set when a stage threw

    long ms_integral = 0;
    long ms_factorized = 0;
    long ms_bracket = 0;

    nlohmann::ordered_json to_json() const;
};

// Runs the full verification pipeline at one parameter point. Throws
// DomainError for precondition violations (bad A/B, bad b); stage failures
// during evaluation are captured in the report instead.
VerificationReport run_verification(long A, long B, const std::string& b_expr, int precision,
                                    const BigReal& tol,
                                    const std::optional<std::string>& epsilon_expr = {});

}  // namespace qdilog
