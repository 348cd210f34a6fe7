#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "qdilog/contour.hpp"
#include "qdilog/errors.hpp"
#include "qdilog/expr.hpp"
#include "qdilog/factorize.hpp"
#include "qdilog/nahm.hpp"
#include "qdilog/qdiff.hpp"
#include "qdilog/report.hpp"
#include "qdilog/wseries.hpp"

using namespace qdilog;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

BigReal parse_tol(const std::string& text, int digits) {
    return BigReal::from_string(text, digits);
}

void write_json(const ordered_json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw DomainError("cannot open output file: " + path);
        out << j.dump(2) << "\n";
    }
}

int cmd_phi(const std::string& b_expr, const std::string& x_expr, int precision) {
    ModularPair pair = make_modular_pair(parse_complex_expr(b_expr, precision), precision);
    std::map<std::string, BigComplex> vars{{"cb", pair.cb}};
    BigComplex x = parse_complex_expr(x_expr, precision, vars);
    BigComplex value = phi_b(x, pair);
    std::cout << "phi_b = " << value.to_string() << "\n";
    return kExitPass;
}

int cmd_integral(long A, long B, const std::string& b_expr, int precision,
                 const std::string& eps_expr, const std::string& tol_str) {
    ModularPair pair = make_modular_pair(parse_complex_expr(b_expr, precision), precision);
    BigReal eps = eps_expr.empty() ? pair.cb.im() / 2
                                   : parse_complex_expr(eps_expr, precision).re();
    BigReal tol = tol_str.empty()
                      ? BigReal::pow10(-(precision - kGuardDigits), precision)
                      : parse_tol(tol_str, precision);
    IntegralSpec spec = make_integral_spec(A, B, pair, eps, tol);
    IntegralResult res = evaluate_state_integral(spec);
    ordered_json j;
    j["value"] = {{"re", res.value.re().to_string()}, {"im", res.value.im().to_string()}};
    j["error_estimate"] = res.error_estimate.to_string(3);
    j["evaluations"] = res.evaluations;
    j["levels"] = {res.levels_left, res.levels_right};
    j["truncation"] = {res.x_left, res.x_right};
    std::cout << j.dump(2) << "\n";
    return kExitPass;
}

int cmd_factorize(long A, long B, const std::string& b_expr, int precision,
                  const std::string& tol_str) {
    ModularPair pair = make_modular_pair(parse_complex_expr(b_expr, precision), precision);
    BigReal tol = tol_str.empty()
                      ? BigReal::pow10(-(precision - kGuardDigits), precision)
                      : parse_tol(tol_str, precision);
    QContext ctx(pair);
    BigComplex v = factorized_value(A, B, ctx, tol);
    std::cout << "factorized = " << v.to_string() << "\n";
    return kExitPass;
}

int cmd_pab(long A, long B) {
    std::cout << compute_pab(A, B).to_string() << "\n";
    return kExitPass;
}

int cmd_verify(long A, long B, const std::string& b_expr, int precision,
               const std::string& tol_str, const std::string& eps_expr,
               const std::string& json_path) {
    BigReal tol = tol_str.empty() ? BigReal::pow10(-Defaults::tol_exponent, precision)
                                  : parse_tol(tol_str, precision);
    std::optional<std::string> eps;
    if (!eps_expr.empty()) eps = eps_expr;
    VerificationReport rep = run_verification(A, B, b_expr, precision, tol, eps);
    write_json(rep.to_json(), json_path);
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_qdiff(long A, long B, const std::string& q0_str, const std::string& q_expr,
              std::size_t order, int precision) {
    Rational q0(q0_str);
    BigComplex q = parse_complex_expr(q_expr, precision);
    BigReal bound = BigReal::pow10(-(precision - kGuardDigits), precision);

    bool reflection = check_reflection(A, B, q0, order);
    BigReal lin = check_linear_qdiff(A, B, q, order);
    BigReal omega = omega_nonlinear_residual(A, B, q, order);
    bool telescope = telescoping_certificate(A, B, q0, static_cast<long>(order) / 2 + 3);

    ordered_json j;
    j["reflection_exact"] = reflection;
    j["telescoping_exact"] = telescope;
    j["linear_residual"] = lin.to_string(3);
    j["omega_residual"] = omega.to_string(3);
    j["bound"] = bound.to_string(3);
    bool pass = reflection && telescope && lin < bound && omega < bound;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
    return pass ? kExitPass : kExitFail;
}

int cmd_nahm(long A, long B, std::size_t order, int precision) {
    NahmReport rep = nahm_puiseux(A, B, order, precision);
    ordered_json j;
    j["A"] = rep.A;
    j["B"] = rep.B;
    j["sigma"] = rep.sigma;
    j["order"] = rep.order;
    j["exact_to_truncation"] = rep.residual_zero;
    ordered_json sym = ordered_json::array();
    for (const auto& ck : rep.symbolic) {
        ordered_json row = ordered_json::array();
        for (const auto& r : ck) row.push_back(r.str());
        sym.push_back(row);
    }
    j["coefficients_over_z_basis"] = sym;
    ordered_json branches = ordered_json::array();
    for (const auto& br : rep.branches) {
        ordered_json row = ordered_json::array();
        for (const auto& v : br) {
            row.push_back({{"re", v.re().to_string(20)}, {"im", v.im().to_string(20)}});
        }
        branches.push_back(row);
    }
    j["branches"] = branches;
    std::cout << j.dump(2) << "\n";
    return rep.residual_zero ? kExitPass : kExitFail;
}

int cmd_suite(const std::string& config_path, const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) throw DomainError("cannot open config file: " + config_path);
    ordered_json cfg = ordered_json::parse(in);
    if (!cfg.is_array()) throw DomainError("config must be a JSON array of points");

    struct Point {
        long A;
        long B;
        std::string b;
        int precision;
        std::string tol;
        std::optional<std::string> epsilon;
    };
    std::vector<Point> points;
    for (const auto& item : cfg) {
        Point p;
        p.A = item.at("A").get<long>();
        p.B = item.at("B").get<long>();
        p.b = item.at("b").get<std::string>();
        p.precision = item.value("precision", Defaults::precision);
        p.tol = item.value("tol", std::string());
        if (item.contains("epsilon")) p.epsilon = item["epsilon"].get<std::string>();
        points.push_back(std::move(p));
    }

    // points run concurrently; reports are assembled in index order
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(points.size());
    for (const auto& p : points) {
        futures.push_back(std::async(std::launch::async, [p]() {
            BigReal tol = p.tol.empty()
                              ? BigReal::pow10(-Defaults::tol_exponent, p.precision)
                              : BigReal::from_string(p.tol, p.precision);
            return run_verification(p.A, p.B, p.b, p.precision, tol, p.epsilon);
        }));
    }

    ordered_json summary;
    summary["schema_version"] = VerificationReport::kSchemaVersion;
    ordered_json results = ordered_json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        VerificationReport rep = futures[i].get();
        if (rep.pass) ++passed;
        ordered_json rj = rep.to_json();
        if (!out_dir.empty()) {
            char name[64];
            std::snprintf(name, sizeof(name), "point_%03zu.json", i);
            write_json(rj, out_dir + "/" + name);
            results.push_back({{"index", i}, {"file", name}, {"pass", rep.pass}});
        } else {
            results.push_back(rj);
        }
    }
    summary["total"] = points.size();
    summary["passed"] = passed;
    summary["all_pass"] = passed == points.size();
    summary["points"] = results;
    write_json(summary, out_dir.empty() ? std::string() : out_dir + "/summary.json");
    if (!out_dir.empty()) {
        std::cout << "suite: " << passed << "/" << points.size() << " passed\n";
    }
    return passed == points.size() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-integral factorization toolkit: contour quadrature, q-series "
                 "factorization, operator polynomials, and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();  // parent options (e.g. --precision) may follow a subcommand

    int precision = Defaults::precision;
    app.add_option("--precision", precision, "working precision in decimal digits")
        ->capture_default_str();

    // phi
    auto* phi = app.add_subcommand("phi", "evaluate Faddeev's quantum dilogarithm");
    std::string phi_b_expr, phi_x_expr;
    phi->add_option("--b", phi_b_expr, "b expression, e.g. exp(i*pi/4)")->required();
    phi->add_option("--x", phi_x_expr, "evaluation point (cb names c_b)")->required();

    // integral
    auto* integral = app.add_subcommand("integral", "contour quadrature of the state integral");
    long iA = 0, iB = 0;
    std::string i_b, i_eps, i_tol;
    integral->add_option("A", iA, "Gaussian weight exponent")->required();
    integral->add_option("B", iB, "power of phi_b")->required();
    integral->add_option("--b", i_b, "b expression")->required();
    integral->add_option("--epsilon", i_eps, "contour height (default Im(c_b)/2)");
    integral->add_option("--tol", i_tol, "target tolerance");

    // factorize
    auto* factorize = app.add_subcommand("factorize", "factorized q-series value");
    long fA = 0, fB = 0;
    std::string f_b, f_tol;
    factorize->add_option("A", fA)->required();
    factorize->add_option("B", fB)->required();
    factorize->add_option("--b", f_b, "b expression")->required();
    factorize->add_option("--tol", f_tol, "series tolerance");

    // pab
    auto* pab = app.add_subcommand("pab", "canonical text of the operator polynomial P_{A,B}");
    long pA = 0, pB = 0;
    pab->add_option("A", pA)->required();
    pab->add_option("B", pB)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "three-route verification at one point");
    long vA = 0, vB = 0;
    std::string v_b, v_tol, v_eps, v_json;
    verify->add_option("A", vA)->required();
    verify->add_option("B", vB)->required();
    verify->add_option("--b", v_b, "b expression")->required();
    verify->add_option("--tol", v_tol, "pass tolerance (default 1e-25)");
    verify->add_option("--epsilon", v_eps, "contour height");
    verify->add_option("--json", v_json, "write the report to this path");

    // qdiff
    auto* qdiff = app.add_subcommand("qdiff", "q-difference equation checks");
    long qA = 0, qB = 0;
    std::string q_q0 = "1/3", q_q = "0.1";
    std::size_t q_order = Defaults::series_order;
    qdiff->add_option("A", qA)->required();
    qdiff->add_option("B", qB)->required();
    qdiff->add_option("--q0", q_q0, "rational base for the exact checks")->capture_default_str();
    qdiff->add_option("--q", q_q, "numeric base for the residual checks")->capture_default_str();
    qdiff->add_option("--order", q_order, "series truncation order")->capture_default_str();

    // nahm
    auto* nahm = app.add_subcommand("nahm", "Puiseux branches of the Nahm equation");
    long nA = 0, nB = 0;
    std::size_t n_order = 8;
    nahm->add_option("A", nA)->required();
    nahm->add_option("B", nB)->required();
    nahm->add_option("--order", n_order, "number of Puiseux coefficients")->capture_default_str();

    // suite
    auto* suite = app.add_subcommand("suite", "batch verification from a JSON config");
    std::string s_config, s_out;
    suite->add_option("--config", s_config, "JSON array of {A, B, b, overrides}")->required();
    suite->add_option("--out", s_out, "directory for per-point reports and summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (phi->parsed()) return cmd_phi(phi_b_expr, phi_x_expr, precision);
        if (integral->parsed()) return cmd_integral(iA, iB, i_b, precision, i_eps, i_tol);
        if (factorize->parsed()) return cmd_factorize(fA, fB, f_b, precision, f_tol);
        if (pab->parsed()) return cmd_pab(pA, pB);
        if (verify->parsed()) return cmd_verify(vA, vB, v_b, precision, v_tol, v_eps, v_json);
        if (qdiff->parsed()) return cmd_qdiff(qA, qB, q_q0, q_q, q_order, precision);
        if (nahm->parsed()) return cmd_nahm(nA, nB, n_order, precision);
        if (suite->parsed()) return cmd_suite(s_config, s_out);
    } catch (const PoleProximityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
