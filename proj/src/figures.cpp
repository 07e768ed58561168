#include "coulres/figures.hpp"

#include <cmath>

#include "coulres/connection.hpp"
#include "coulres/errors.hpp"
#include "coulres/geometry.hpp"

namespace coulres {

const std::vector<FigureSpec>& figure_specs()
{
    static const std::vector<FigureSpec> specs{
        {"c_minus", "c_minus.csv", "sigma^{1/2} C_-(sigma), Z = 1, sigma in [0.05, 2]",
         {"sigma", "re", "im"}},
        {"U_at_5", "U_at_5.csv", "U(5; E) = v_-(5; E^{1/2}) / v_-(5; 0) and dU/dE, Z = 1, E in [0, 2]",
         {"E", "re_U", "im_U", "re_dU", "im_dU"}},
        {"transitional_raw", "transitional_raw.csv",
         "e^{-pi Z r^{1/2}/4 varsigma} W_{kappa,1/2}(2 i varsigma r^{1/2}) against r^{1/2}, Z = 3",
         {"varsigma", "r_half", "re", "im"}},
        {"transitional_rescaled", "transitional_rescaled.csv",
         "varsigma^{-1/2} e^{-i r^{1/2} phi} times the raw profile against rho = r^{-1/2}, Z = 3",
         {"varsigma", "rho", "re", "im"}},
    };
    return specs;
}

const FigureSpec& figure_spec(const std::string& name)
{
    for (const auto& s : figure_specs())
        if (s.name == name) return s;
    throw DomainError("unknown figure dataset: " + name);
}

namespace {

std::string describe(const std::string& name, const FigureOptions& o)
{
    std::string s = name;
    auto add = [&](const char* k, double v) { s += std::string(";") + k + "=" + format_double(v); };
    add("Zc", o.Z_c_minus);
    add("ZU", o.Z_U);
    add("Zt", o.Z_transitional);
    add("rU", o.U_radius);
    for (double v : o.varsigmas) add("vs", v);
    add("ns", o.n_sigma);
    add("nE", o.n_E);
    add("nraw", o.n_raw);
    add("nrho", o.n_rho);
    return s;
}

}  // namespace

CsvTable figure_data(const std::string& name, const FigureOptions& o)
{
    const FigureSpec& spec = figure_spec(name);
    CsvTable t;
    t.columns = spec.columns;
    t.config = describe(name, o);

    if (name == "c_minus") {
        for (int j = 0; j < o.n_sigma; ++j) {
            double s = 0.05 + (2.0 - 0.05) * j / (o.n_sigma - 1);
            cplx v = std::exp(log_c_pm(s, o.Z_c_minus, -1) + 0.5 * std::log(s));
            t.rows.push_back({s, v.real(), v.imag()});
        }
    } else if (name == "U_at_5") {
        std::vector<double> E(o.n_E + 1);
        for (int j = 0; j <= o.n_E; ++j) E[j] = 2.0 * j / o.n_E;
        auto U = U_ratio(o.U_radius, E, o.Z_U);
        auto dU = differentiate(E, U);
        for (std::size_t j = 0; j < E.size(); ++j)
            t.rows.push_back({E[j], U[j].real(), U[j].imag(), dU[j].real(), dU[j].imag()});
    } else if (name == "transitional_raw") {
        for (double vs : o.varsigmas)
            for (int j = 0; j < o.n_raw; ++j) {
                double rh = 0.1 + (20.0 - 0.1) * j / (o.n_raw - 1);
                cplx v = transitional_raw(vs, o.Z_transitional, rh);
                t.rows.push_back({vs, rh, v.real(), v.imag()});
            }
    } else {
        for (double vs : o.varsigmas)
            for (int j = 0; j < o.n_rho; ++j) {
                double rho = std::pow(0.01, double(j) / (o.n_rho - 1));
                cplx v = transitional_profile(vs, o.Z_transitional, 1.0 / rho);
                t.rows.push_back({vs, rho, v.real(), v.imag()});
            }
    }
    return t;
}

}  // namespace coulres
