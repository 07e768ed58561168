// coulres: evaluate functions, run resolvent solves, verification suites and
// figure datasets.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 numerical-domain error.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulres/connection.hpp"
#include "coulres/errors.hpp"
#include "coulres/figures.hpp"
#include "coulres/geometry.hpp"
#include "coulres/io.hpp"
#include "coulres/radial.hpp"
#include "coulres/specfun.hpp"
#include "coulres/verify.hpp"

using namespace coulres;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, numerical = 3 };

struct EvalArgs {
    std::string function;
    double re = 0.0, im = 0.0;
    double kappa_re = 0.0, kappa_im = 0.0, mu = 0.5;
    double a_re = 1.0, a_im = 0.0, b_re = 2.0, b_im = 0.0;
    double Z = 1.0, x = 1.0, sigma = 0.0, r = 1.0, a00 = 0.0;
    double varsigma = 0.25, r_half = 1.0, E = 0.0;
    std::string sign = "plus";
    bool modulus = false, as_json = false;
};

std::string num(cplx v)
{
    if (v.imag() == 0.0) return format_double(v.real());
    std::string s = format_double(v.real());
    s += v.imag() < 0 ? " - " : " + ";
    return s + format_double(std::abs(v.imag())) + "i";
}

int sign_of(const std::string& s)
{
    if (s == "plus" || s == "+" || s == "+1") return 1;
    if (s == "minus" || s == "-" || s == "-1") return -1;
    throw ConfigError("--sign must be plus or minus");
}

int cmd_eval(const EvalArgs& a)
{
    EvalDiagnostics d;
    bool has_diag = false;
    cplx v;
    ModelParams p;
    p.Z = a.Z;
    p.a00 = a.a00;
    const std::string& f = a.function;
    const cplx z(a.re, a.im), kappa(a.kappa_re, a.kappa_im);
    if (f == "gamma") {
        v = coulres::gamma(z, &d);
        has_diag = true;
    } else if (f == "log_gamma") {
        v = log_gamma(z, &d);
        has_diag = true;
    } else if (f == "kummer_m") {
        v = kummer_m({a.a_re, a.a_im}, {a.b_re, a.b_im}, z, &d);
        has_diag = true;
    } else if (f == "whittaker_m") {
        v = whittaker_m(kappa, a.mu, z, &d);
        has_diag = true;
    } else if (f == "whittaker_w") {
        v = whittaker_w(kappa, a.mu, z, &d);
        has_diag = true;
    } else if (f == "bessel_j0" || f == "bessel_j1" || f == "bessel_y0" || f == "bessel_y1") {
        auto fn = f == "bessel_j0" ? bessel_j0 : f == "bessel_j1" ? bessel_j1 : f == "bessel_y0" ? bessel_y0 : bessel_y1;
        v = fn(a.re, &d);
        has_diag = true;
    } else if (f == "phase") {
        v = phase(a.x, a.sigma, p);
    } else if (f == "c_pm") {
        v = c_pm(a.sigma, a.Z, sign_of(a.sign));
    } else if (f == "c_pm0") {
        v = c_pm0(a.sigma, a.Z, sign_of(a.sign));
    } else if (f == "small_r_limit_w") {
        v = small_r_limit_w(a.sigma, a.Z, sign_of(a.sign));
    } else if (f == "v_pm") {
        v = v_pm(a.r, a.sigma, a.Z, sign_of(a.sign));
    } else if (f == "U") {
        v = U_ratio(a.r, {a.E}, a.Z)[0];
    } else if (f == "transitional_profile") {
        v = transitional_profile(a.varsigma, a.Z, a.r_half);
    } else if (f == "transitional_raw") {
        v = transitional_raw(a.varsigma, a.Z, a.r_half);
    } else {
        throw ConfigError("unknown function '" + f + "'");
    }
    if (a.modulus) v = std::abs(v);
    if (a.as_json) {
        json j;
        j["function"] = f;
        j["value"] = {v.real(), v.imag()};
        if (has_diag) {
            j["method_used"] = method_name(d.method_used);
            j["est_rel_error"] = d.est_rel_error;
            j["terms_used"] = d.terms_used;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "value: " << num(v) << "\n";
        if (has_diag) {
            std::cout << "method_used: " << method_name(d.method_used) << "\n";
            std::cout << "est_rel_error: " << format_double(d.est_rel_error) << "\n";
        }
    }
    return ok;
}

// ---- solve ----

double get_num(const json& j, const char* key, double fallback)
{
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

std::vector<double> grid_from(const json& g)
{
    std::string kind = g.value("kind", "log");
    std::vector<double> r;
    if (kind == "list") {
        if (!g.contains("r") || !g["r"].is_array()) throw ConfigError("grid.r must be an array");
        for (const auto& v : g["r"]) r.push_back(v.get<double>());
    } else if (kind == "log" || kind == "linear") {
        double a = get_num(g, "r_min", 0.0), b = get_num(g, "r_max", 0.0);
        int n = int(get_num(g, "n", 0));
        if (!(a > 0.0) || !(b > a) || n < 2) throw ConfigError("grid needs 0 < r_min < r_max and n >= 2");
        if (kind == "log") {
            r = log_grid(a, b, n);
        } else {
            for (int i = 0; i < n; ++i) r.push_back(a + (b - a) * i / (n - 1));
        }
    } else {
        throw ConfigError("grid.kind must be log, linear or list");
    }
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1])) throw ConfigError("grid must be strictly increasing");
    if (r.empty() || !(r.front() > 0.0)) throw ConfigError("grid points must be positive");
    return r;
}

Forcing forcing_from(const json& f)
{
    std::string type = f.value("type", "");
    if (type == "zero") return zero_forcing(get_num(f, "r_min", 1.0), get_num(f, "r_max", 2.0));
    if (type == "bump") {
        double a = get_num(f, "r_min", 0.0), b = get_num(f, "r_max", 0.0);
        if (!(a > 0.0) || !(b > a)) throw ConfigError("forcing needs 0 < r_min < r_max");
        cplx amp = 1.0;
        if (f.contains("amplitude")) {
            const auto& A = f["amplitude"];
            if (A.is_number()) amp = A.get<double>();
            else if (A.is_array() && A.size() == 2) amp = {A[0].get<double>(), A[1].get<double>()};
            else throw ConfigError("forcing.amplitude must be a number or [re, im]");
        }
        std::vector<double> poly;
        if (f.contains("poly")) poly = f["poly"].get<std::vector<double>>();
        return bump_forcing(a, b, amp, poly);
    }
    throw ConfigError("forcing.type must be bump or zero");
}

int cmd_solve(const std::string& config_path, const std::string& out_override)
{
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config " + config_path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ModelParams p;
    const json params = cfg.value("params", json::object());
    p.Z = get_num(params, "Z", 1.0);
    p.a00 = get_num(params, "a00", 0.0);
    p.lambda_ang = get_num(params, "lambda", 0.0);
    if (!cfg.contains("sigma")) throw ConfigError("config needs sigma");
    double sigma = get_num(cfg, "sigma", 0.0);
    if (!cfg.contains("grid") || !cfg.contains("forcing")) throw ConfigError("config needs grid and forcing");
    auto r = grid_from(cfg["grid"]);
    Forcing f = forcing_from(cfg["forcing"]);
    int sign = int(get_num(cfg, "sign", 1.0));
    if (sign != 1) throw ConfigError("only the outgoing (sign = +1) resolvent is implemented");
    const json out = cfg.value("output", json::object());
    std::string dir = out_override.empty() ? out.value("dir", std::string()) : out_override;
    if (dir.empty()) {
        const char* env = std::getenv("COULRES_OUT");
        dir = env ? env : "coulres_out";
    }
    std::string name = out.value("name", std::string("solve"));

    auto res = resolvent_apply(f, sigma, p, r);
    const std::string canon = cfg.dump();
    CsvTable t;
    t.columns = {"r", "re_u", "im_u", "re_u0", "im_u0"};
    t.config = canon;
    for (std::size_t i = 0; i < r.size(); ++i)
        t.rows.push_back({r[i], res.u[i].real(), res.u[i].imag(), res.u0[i].real(), res.u0[i].imag()});
    json meta;
    meta["version"] = version;
    meta["config_hash"] = hex64(fnv1a64(canon));
    meta["config"] = cfg;
    meta["wronskian"] = {res.wronskian.real(), res.wronskian.imag()};
    meta["wronskian_drift"] = res.wronskian_drift;
    meta["method_used"] = method_name(res.method_meta.method_used);
    meta["est_rel_error"] = res.method_meta.est_rel_error;
    meta["points"] = r.size();
    write_atomic(dir + "/" + name + ".csv", to_csv(t));
    write_atomic(dir + "/" + name + ".json", meta.dump(2) + "\n");
    std::cout << "wrote " << dir << "/" << name << ".csv and .json\n";
    return ok;
}

// ---- verify ----

const char* relation_name(Relation r)
{
    return r == Relation::at_most ? "<=" : r == Relation::at_least ? ">=" : "within";
}

int cmd_verify(const std::string& suite, bool dry, std::uint64_t seed, const std::string& report_path)
{
    auto ids = suite_criteria(suite);
    json rep;
    rep["suite"] = suite;
    rep["version"] = version;
    if (dry) {
        rep["dry"] = true;
        for (int id : ids) rep["criteria"].push_back({{"id", id}, {"title", criterion_title(id)}});
        if (suite == "figures" || suite == "all")
            for (const auto& s : figure_specs())
                rep["datasets"].push_back({{"name", s.name}, {"file", s.file}, {"columns", s.columns},
                                           {"description", s.description}});
        std::cout << rep.dump(2) << "\n";
        return ok;
    }
    VerifyOptions opt;
    opt.seed = seed;
    bool all_pass = true;
    std::string first_fail;
    for (int id : ids) {
        auto cr = run_criterion(id, opt);
        json jc{{"id", id}, {"title", cr.title}, {"pass", cr.pass()}, {"seconds", cr.seconds}};
        for (const auto& c : cr.checks) {
            json k{{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"tolerance", c.tolerance},
                   {"relation", relation_name(c.relation)}};
            if (c.relation == Relation::within) k["target"] = c.target;
            if (!c.detail.empty()) k["detail"] = c.detail;
            jc["checks"].push_back(k);
            if (!c.pass && first_fail.empty()) first_fail = "criterion " + std::to_string(id) + ": " + c.name;
        }
        all_pass = all_pass && cr.pass();
        rep["criteria"].push_back(jc);
    }
    rep["pass"] = all_pass;
    std::string text = rep.dump(2) + "\n";
    if (report_path.empty()) std::cout << text;
    else write_atomic(report_path, text);
    if (!all_pass) {
        std::cerr << "verification failed: " << first_fail << "\n";
        return verify_failed;
    }
    return ok;
}

// ---- figures ----

int cmd_figures(const std::string& which, std::string dir)
{
    if (dir.empty()) {
        const char* env = std::getenv("COULRES_OUT");
        dir = env ? env : "coulres_out";
    }
    std::vector<std::string> names;
    if (which == "all") {
        for (const auto& s : figure_specs()) names.push_back(s.name);
    } else {
        figure_spec(which);
        names.push_back(which);
    }
    for (const auto& n : names) {
        const auto& spec = figure_spec(n);
        write_atomic(dir + "/" + spec.file, to_csv(figure_data(n)));
        std::cout << "wrote " << dir << "/" << spec.file << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"coulres: low-energy Coulomb resolvent toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    EvalArgs ea;
    auto* ev = app.add_subcommand("eval", "evaluate a registered function");
    ev->add_option("function", ea.function,
                   "gamma, log_gamma, kummer_m, whittaker_m, whittaker_w, bessel_j0/j1/y0/y1, phase, c_pm, c_pm0, "
                   "small_r_limit_w, v_pm, U, transitional_profile, transitional_raw")
        ->required();
    ev->add_option("--re", ea.re, "real part of the argument");
    ev->add_option("--im", ea.im, "imaginary part of the argument");
    ev->add_option("--kappa-re", ea.kappa_re);
    ev->add_option("--kappa-im", ea.kappa_im);
    ev->add_option("--mu", ea.mu);
    ev->add_option("--a-re", ea.a_re);
    ev->add_option("--a-im", ea.a_im);
    ev->add_option("--b-re", ea.b_re);
    ev->add_option("--b-im", ea.b_im);
    ev->add_option("--Z", ea.Z);
    ev->add_option("--x", ea.x);
    ev->add_option("--sigma", ea.sigma);
    ev->add_option("--r", ea.r);
    ev->add_option("--E", ea.E);
    ev->add_option("--a00", ea.a00);
    ev->add_option("--varsigma", ea.varsigma);
    ev->add_option("--r-half", ea.r_half);
    ev->add_option("--sign", ea.sign, "plus or minus");
    ev->add_flag("--modulus", ea.modulus, "print |value|");
    ev->add_flag("--json", ea.as_json);

    std::string config, solve_out;
    auto* so = app.add_subcommand("solve", "resolvent solve from a JSON run config");
    so->add_option("config", config)->required();
    so->add_option("--out", solve_out, "output directory (overrides config and COULRES_OUT)");

    std::string suite, report;
    bool dry = false;
    std::uint64_t seed = VerifyOptions{}.seed;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    ve->add_flag("--dry", dry, "list what would be computed");
    ve->add_option("--seed", seed);
    ve->add_option("--report", report, "write the JSON report here instead of stdout");

    std::string which, fig_out;
    auto* fi = app.add_subcommand("figures", "write figure datasets as CSV");
    fi->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"c_minus", "U_at_5", "transitional_raw", "transitional_rescaled", "all"}));
    fi->add_option("--out", fig_out, "output directory (default $COULRES_OUT or ./coulres_out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*ev) return cmd_eval(ea);
        if (*so) return cmd_solve(config, solve_out);
        if (*ve) return cmd_verify(suite, dry, seed, report);
        if (*fi) return cmd_figures(which, fig_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return usage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return numerical;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return numerical;
    }
    return usage;
}
