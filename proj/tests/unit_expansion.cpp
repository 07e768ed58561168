#include <cmath>

#include "doctest.h"

#include "coulres/connection.hpp"
#include "coulres/expansion.hpp"
#include "coulres/radial.hpp"

using namespace coulres;

namespace {

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("bf series")
{
    double r = 7.0, sigma = 0.6, Z = 1.3;
    for (int sign : {1, -1}) {
        cplx s = double(sign) * I;
        cplx pre = std::exp(s * sigma * r) * std::pow(r, s * Z / (2 * sigma));
        CHECK(std::abs(bf_series_w(r, sigma, Z, 1, sign) - pre) < 1e-14);
        cplx b1 = Z * s * (Z + s * 2.0 * sigma) / (8 * std::pow(sigma, 3) * r);
        CHECK(std::abs(bf_term(r, sigma, Z, 1, sign) - b1) < 1e-14 * std::abs(b1));
    }
}

TEST_CASE("bf series remainder")
{
    ModelParams p;
    double sigma = 0.8;
    auto r = log_grid(50.0, 5000.0, 30);
    auto op = outgoing_pair(sigma, p, r);
    for (int K : {1, 2, 3}) {
        std::vector<double> e;
        for (std::size_t i = 0; i < r.size(); ++i) e.push_back(std::abs(op.w_plus[i].u - bf_series_w(r[i], sigma, p.Z, K, 1)));
        CHECK(-loglog_slope(r, e).slope >= K - 0.1);
    }
}

TEST_CASE("tf coefficients")
{
    CHECK(tf_coefficient(0) == 1.0);
    CHECK(tf_coefficient(1) == doctest::Approx(3.0 / 16));
    CHECK(tf_coefficient_literal(1) == doctest::Approx(3.0 / 16));
    CHECK(tf_coefficient(2) == doctest::Approx(-15.0 / 512));
    CHECK(std::abs(tf_coefficient_literal(2) - tf_coefficient(2)) > 0.1);
}

TEST_CASE("tf series remainder")
{
    std::vector<double> r, e;
    for (double t = 20; t < 2e4; t *= 1.6) r.push_back(t);
    for (int K : {1, 2, 3}) {
        e.clear();
        for (double t : r) e.push_back(std::abs(v_pm(t, 0.0, 1.0, 1) - tf_series_v0(t, 1.0, K, 1)));
        CHECK(std::abs(loglog_slope(r, e).slope - (-K / 2.0 + 0.25)) <= 0.1);
    }
}

TEST_CASE("u0 decomposition")
{
    ModelParams p;
    p.Z = 1.4;
    for (double sigma : {0.0, 0.5}) {
        std::vector<double> r = log_grid(0.5, 100.0, 30);
        std::vector<cplx> u;
        for (double ri : r) {
            double x = 1 / ri;
            u.push_back(std::exp(I * phase(x, sigma, p)) * std::pow(sigma * sigma + p.Z * x, -0.25));
        }
        auto u0 = extract_u0(r, u, sigma, p, 1);
        for (auto v : u0) CHECK(std::abs(v - 1.0) < 1e-13);
        auto back = restore_u(r, u0, sigma, p, 1);
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(std::abs(back[i] - u[i]) < 1e-13 * std::abs(u[i]));
    }
}

TEST_CASE("polyhomogeneous fits")
{
    auto rho = geometric_grid(0.5, 0.8, 40);
    std::vector<cplx> s;
    for (double x : rho) s.push_back(1.0 + x * x);
    auto rep = fit_polyhomog(rho, s, Face::tf, 4, IndexSet::log_index_set());
    bool logs = false;
    for (bool b : rep.log_detected) logs = logs || b;
    CHECK_FALSE(logs);
    CHECK(rep.residual_norm < 1e-12);
    for (const auto& t : rep.fitted_coeffs.terms) {
        cplx want = (t.kappa == 0 && (t.k == 0 || t.k == 2)) ? 1.0 : 0.0;
        CHECK(std::abs(t.coeff - want) < 1e-8);
    }

    std::vector<cplx> flat(rho.size(), cplx(0.3, -2.0));
    auto rf = fit_polyhomog(rho, flat, Face::tf, 4, IndexSet::log_index_set());
    for (const auto& t : rf.fitted_coeffs.terms)
        if (t.k > 0) CHECK(std::abs(t.coeff) < 1e-8);
}

TEST_CASE("log detection on the normal-integral example")
{
    // along tf at fixed xhat: x = rho^2 xh/(1+xh), sigma^2 = rho^2/(1+xh)
    double Z = 1.0, xbar = 1.0, xh = 1.0;
    auto rho = geometric_grid(0.25, 0.8, 40);
    std::vector<cplx> s;
    for (double r : rho) {
        double x = r * r * xh / (1 + xh) / Z, s2 = r * r / (1 + xh);
        s.push_back(-(s2 / Z) * std::log((s2 + Z * x) / (s2 + Z * xbar)));
    }
    // candidate pairs: E together with the first log pair beyond it at each kappa
    IndexSet cand([](int kappa) { return kappa == 0 ? 0 : 2 * kappa - 1; });
    auto rep = fit_polyhomog(rho, s, Face::tf, 4, cand);
    bool found21 = false;
    for (std::size_t i = 0; i < rep.fitted_coeffs.terms.size(); ++i) {
        const auto& t = rep.fitted_coeffs.terms[i];
        if (t.k == 2 && t.kappa == 1) found21 = rep.log_detected[i];
    }
    CHECK(found21);
    CHECK(indexset_plus(IndexSet::generated_by({{0, 0}})).contains(2, 1));
}

TEST_CASE("zf Taylor coefficients of an E-independent family")
{
    std::vector<double> x{0.2, 0.4, 0.6, 0.8};
    auto fam = [&](double) {
        std::vector<cplx> v;
        for (double xi : x) v.push_back(std::exp(cplx(xi, 1.0)));
        return v;
    };
    ZfTaylorOptions o;
    auto res = zf_taylor(fam, 3, o);
    for (std::size_t k = 1; k < res.w.size(); ++k)
        for (auto c : res.w[k]) CHECK(std::abs(c) * std::pow(o.E_max, k) < 1e-10);
}

TEST_CASE("uniform bf prefactor is unimodular")
{
    for (double rho = 0.01; rho < 1; rho += 0.07)
        for (int sign : {1, -1}) {
            double m = std::abs(bf_uniform_prefactor(rho, 0.3, 1.0, sign));
            CHECK(m == doctest::Approx(1.0).epsilon(1e-13));
        }
}
