#include <array>
#include <cmath>

#include "doctest.h"

#include "coulres/errors.hpp"
#include "coulres/radial.hpp"

using namespace coulres;

namespace {

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("zero energy solutions are Bessel functions")
{
    ModelParams p;
    auto r = log_grid(0.1, 100.0, 60);
    auto hp = integrate_homogeneous(0.0, p, Direction::outward, r);
    for (std::size_t i = 0; i < r.size(); ++i) {
        double z = 2 * std::sqrt(r[i]);
        double J = std::sqrt(r[i]) * bessel_j1(z);
        CHECK(std::abs(hp.u1[i].u - J) <= 1e-9 * std::max(std::abs(J), std::pow(r[i], 0.25)));
    }
    // u2 is a fixed combination of the J and Y forms
    auto jy = [&](std::size_t i) {
        double s = std::sqrt(r[i]), z = 2 * s;
        double J = s * bessel_j1(z), Y = s * bessel_y1(z);
        double dJ = bessel_j0(z), dY = bessel_y0(z);  // d/dr (s C1(2s)) = C0(2s)
        return std::array<double, 4>{J, Y, dJ, dY};
    };
    auto b0 = jy(0);
    double det = b0[0] * b0[3] - b0[1] * b0[2];
    cplx alpha = (hp.u2[0].u * b0[3] - hp.u2[0].du * b0[1]) / det;
    cplx beta = (b0[0] * hp.u2[0].du - b0[2] * hp.u2[0].u) / det;
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto b = jy(i);
        cplx pred = alpha * b[0] + beta * b[1];
        CHECK(std::abs(hp.u2[i].u - pred) <= 1e-9 * std::max(1.0, std::abs(pred)));
    }
}

TEST_CASE("free waves without the Coulomb term")
{
    ModelParams p;
    HomogeneousOptions opt;
    opt.coulomb_scale = 0.0;
    auto r = log_grid(0.5, 60.0, 40);
    auto hp = integrate_homogeneous(1.0, p, Direction::inward, r, opt);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(std::abs(hp.u1[i].u - std::exp(I * r[i])) < 1e-9);
        CHECK(std::abs(hp.u2[i].u - std::exp(-I * r[i])) < 1e-9);
    }
}

TEST_CASE("outgoing pair normalization")
{
    ModelParams p;
    p.Z = 1.0;
    double sigma = 0.8;
    auto r = log_grid(0.05, 2000.0, 200);
    auto op = outgoing_pair(sigma, p, r);
    CHECK(op.wronskian_drift <= 1e-10);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(std::abs(op.w_minus[i].u - std::conj(op.w_plus[i].u)) <= 1e-15 * std::abs(op.w_plus[i].u));
        cplx W = op.w_plus[i].u * op.w_minus[i].du - op.w_plus[i].du * op.w_minus[i].u;
        CHECK(std::abs(W - cplx(0, -2 * sigma)) <= 1e-9);
        if (r[i] > 20) {
            cplx n = op.w_plus[i].u * std::exp(-I * sigma * r[i]) * std::pow(r[i], -I * p.Z / (2 * sigma));
            CHECK(std::abs(n - 1.0) * r[i] < 1.0);
        }
    }
}

TEST_CASE("resolvent structure")
{
    ModelParams p;
    auto r = log_grid(0.1, 40.0, 300);
    auto zero = resolvent_apply(zero_forcing(), 0.8, p, r);
    for (auto v : zero.u) CHECK(v == cplx(0.0));

    auto f = bump_forcing(1.0, 2.0);
    for (double sigma : {0.8, 0.0}) {
        auto res = resolvent_apply(f, sigma, p, r);
        std::vector<double> tail;
        for (double ri : r)
            if (ri > 2.0) tail.push_back(ri);
        auto w = outgoing_solution(sigma, p, tail);
        std::size_t off = r.size() - tail.size();
        cplx ratio0 = res.u[off] / w[0].u;
        for (std::size_t i = 0; i < tail.size(); ++i)
            CHECK(std::abs(res.u[off + i] / w[i].u - ratio0) <= 1e-8 * std::abs(ratio0));
    }

    // linearity
    auto g = bump_forcing(0.5, 3.0, cplx(0.2, 1.0), {0.3, -0.1});
    auto h = combine(cplx(2, -1), f, cplx(0.5, 0.5), g);
    auto uf = resolvent_apply(f, 0.6, p, r), ug = resolvent_apply(g, 0.6, p, r), uh = resolvent_apply(h, 0.6, p, r);
    for (std::size_t i = 0; i < r.size(); ++i) {
        cplx lin = cplx(2, -1) * uf.u[i] + cplx(0.5, 0.5) * ug.u[i];
        CHECK(std::abs(uh.u[i] - lin) <= 1e-9 * std::max(1.0, std::abs(lin)));
    }
}

TEST_CASE("shift reduction")
{
    auto f = bump_forcing(1.0, 3.0, 1.0, {0.4, 0.2});
    auto id = reduce_a(0.0, 2.0, 0.7, f);
    CHECK(id.Z_eff == 2.0);
    CHECK(id.r0_of_r(3.5) == 3.5);
    CHECK(id.f0.eval(1.7) == f.eval(1.7));
    auto rp = reduce_a(0.3, 2.0, 0.7, f);
    CHECK(rp.r0_of_r(4.0) == 0.3 + 4.0);
    CHECK(rp.Z_eff == doctest::Approx(2.0 - 0.49 * 0.3));

    ModelParams p;
    p.Z = 2.0;
    p.a00 = 0.3;
    auto r = log_grid(0.2, 50.0, 200);
    auto a = resolvent_apply(f, 0.7, p, r);
    auto b = resolvent_apply_direct(f, 0.7, 2.0, 0.3, r);
    double m = 0;
    for (std::size_t i = 0; i < r.size(); ++i) m = std::max(m, std::abs(a.u[i] - b.u[i]));
    CHECK(m <= 1e-8);
}

TEST_CASE("model problem")
{
    auto zero = [](double) { return cplx(0.0); };
    auto c1 = model_solve(-0.5, -0.25, zero, 1.0);
    for (double xh : {0.01, 1.0, 50.0}) CHECK(c1(xh) == cplx(1.0));
    auto gen = model_solve(0.7, 1.2, zero, cplx(2, 1));
    for (double xh : {0.1, 1.0, 7.0})
        CHECK(std::abs(gen(xh) - cplx(2, 1) * std::pow(xh, -1.2) * std::pow(1 + xh, -1.45)) < 1e-13);

    auto v = model_solve(-1.0, 0.25, [](double) { return cplx(1.0); }, 0.0);
    std::vector<double> xh;
    std::vector<cplx> vs;
    for (int i = 0; i < 2000; ++i) {
        xh.push_back(0.5 + 2.5 * i / 1999);
        vs.push_back(v(xh.back()));
    }
    auto Mv = model_operator_apply(xh, vs, -1.0, 0.25);
    double m = 0;
    for (auto x : Mv) m = std::max(m, std::abs(x - 1.0));
    CHECK(m <= 1e-8);
}

TEST_CASE("normal integral")
{
    double sigma = 0.4, Z = 1.0, x = 0.3, xbar = 2.0;
    CHECK(normal_integral([](double, double) { return 0.0; }, x, sigma, xbar) == 0.0);
    CHECK(normal_integral([](double x0, double) { return x0; }, x, sigma, xbar) == doctest::Approx(xbar - x).epsilon(1e-13));
    auto g = [&](double x0, double s) { return x0 * s * s / (s * s + Z * x0); };
    double closed = -(sigma * sigma / Z) * std::log((sigma * sigma + Z * x) / (sigma * sigma + Z * xbar));
    CHECK(std::abs(normal_integral(g, x, sigma, xbar) - closed) <= 1e-10);
    CHECK_THROWS_AS(normal_integral(g, 0.0, sigma, xbar), DomainError);
}
