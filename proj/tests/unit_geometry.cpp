#include <cmath>
#include <random>

#include "doctest.h"

#include "coulres/errors.hpp"
#include "coulres/geometry.hpp"

using namespace coulres;

TEST_CASE("resolve and classify")
{
    CHECK(classify(resolve(0.5, 1.0, 1.0)) == Regime::interior);
    CHECK(classify(resolve(1e-6, 1.0, 1.0)) == Regime::near_bf);
    auto p = resolve(1e-4, 1e-2, 1.0);
    CHECK(p.xhat == doctest::Approx(1.0));
    CHECK(p.rho_tf == doctest::Approx(0.0141421356).epsilon(1e-8));
    CHECK(classify(p) == Regime::near_tf);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-8, 2);
    for (int i = 0; i < 500; ++i) {
        auto q = resolve(std::pow(10.0, U(rng)), std::pow(10.0, U(rng)), std::pow(10.0, U(rng) / 4));
        CHECK(q.rho_bf + q.rho_zf == 1.0);
    }
}

TEST_CASE("phase values")
{
    ModelParams p;
    p.Z = 1.0;
    CHECK(phase(1.0, 0.0, p).real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(phase(1.0, 1.0, p).real() == doctest::Approx(2.295587149392638).epsilon(1e-14));
    p.Z = 4.0;
    CHECK(phase(1.0, 0.0, p).real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(phase_derivative(0.3, 0.0, p).real() == doctest::Approx(-2.0 * std::pow(0.3, -1.5)).epsilon(1e-13));
}

TEST_CASE("phase eikonal identity and branches")
{
    for (double a00 : {0.0, 0.25})
        for (double sigma : {0.0, 1e-3, 0.4, 2.0})
            for (double x = 0.01; x < 5; x *= 1.7) {
                ModelParams p;
                p.Z = 1.5;
                p.a00 = a00;
                cplx d = phase_derivative(x, sigma, p);
                double rhs = sigma * sigma + p.Z * x - sigma * sigma * a00 * x;
                CHECK(std::abs(std::pow(x, 4) * d * d - rhs) <= 1e-10 * std::max(1.0, rhs));
                if (sigma > 0) {
                    double h = 1e-4 * x;
                    cplx fd = (phase(x + h, sigma, p) - phase(x - h, sigma, p)) / (2 * h);
                    cplx fd2 = (phase(x + h / 2, sigma, p) - phase(x - h / 2, sigma, p)) / h;
                    cplx rich = (4.0 * fd2 - fd) / 3.0;
                    CHECK(std::abs(rich - d) <= 1e-7 * std::abs(d));
                }
            }
    // Taylor and direct evaluations agree across the switch
    ModelParams p;
    p.Z = 1.0;
    double x = 1.0, sigma = std::sqrt(9e-4);
    CHECK(std::abs(phase_taylor(x, sigma, p) - phase_direct(x, sigma, p)) < 1e-12);
    CHECK_THROWS_AS(phase(-1.0, 0.5, p), DomainError);
    p.a00 = 10.0;
    CHECK_THROWS_AS(effective_charge(1.0, p), AttractivityError);
}

TEST_CASE("normal operator kernel")
{
    ModelParams p;
    p.Z = 1.3;
    double sigma = 0.6;
    std::vector<double> x;
    std::vector<cplx> u;
    for (int i = 0; i < 800; ++i) {
        x.push_back(0.1 + 2.0 * i / 799);
        u.push_back(std::pow(sigma * sigma + p.Z * x.back(), -0.25));
    }
    auto Nu = normal_operator_apply(x, u, sigma, p);
    double m = 0;
    for (auto v : Nu) m = std::max(m, std::abs(v));
    CHECK(m <= 1e-8);
}

TEST_CASE("model operator identity")
{
    // conjugated normal operator in xhat, (l, k) = (-1/2, -1/4)
    ModelParams p;
    p.Z = 2.0;
    double sigma = 0.5, s2 = sigma * sigma;
    std::vector<double> x, xh;
    std::vector<cplx> g, v;
    for (int i = 0; i < 1200; ++i) {
        double xi = 0.05 + 0.5 * i / 1199;
        x.push_back(xi);
        xh.push_back(p.Z * xi / s2);
        cplx vi = std::exp(cplx(0, 1) * xi) * (1.0 + xi * xi);
        v.push_back(vi);
        g.push_back(std::pow(s2 + p.Z * xi, -0.25) * vi);
    }
    auto Ng = normal_operator_apply(x, g, sigma, p);
    auto Mv = model_operator_apply(xh, v, -0.5, -0.25);
    double m = 0;
    for (std::size_t i = 3; i + 3 < x.size(); ++i) {
        cplx lhs = Ng[i] / (x[i] * std::pow(s2 + p.Z * x[i], 0.25));
        m = std::max(m, std::abs(lhs - Mv[i]));
    }
    CHECK(m <= 1e-7);
}

TEST_CASE("index sets")
{
    auto F = IndexSet::generated_by({{0, 0}});
    auto Fp = indexset_plus(F);
    CHECK(Fp.contains(0, 0));
    CHECK(Fp.contains(2, 1));
    CHECK_FALSE(Fp.contains(1, 1));
    CHECK(indexset_plus(IndexSet()).empty_up_to(40));
    auto E = IndexSet::log_index_set();
    auto Ep = indexset_plus(E);
    for (int k = 0; k <= 40; ++k)
        for (int kappa = 0; kappa <= 40; ++kappa) {
            CHECK(E.contains(k, kappa) == (kappa <= k / 2));
            CHECK(Ep.contains(k, kappa) == E.contains(k, kappa));
        }
}

TEST_CASE("differentiate")
{
    std::vector<double> x, u;
    for (int i = 0; i < 1300; ++i) {
        x.push_back(std::pow(1.003, i));
        u.push_back(std::sin(x.back()));
    }
    auto d = differentiate(x, u);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(d[i] - std::cos(x[i])) < 1e-4);
}
