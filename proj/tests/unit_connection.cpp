#include <cmath>
#include <string>

#include "doctest.h"

#include "coulres/connection.hpp"
#include "coulres/expansion.hpp"
#include "coulres/radial.hpp"

using namespace coulres;

namespace {

const double pi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("connection coefficients")
{
    // mpmath values of the closed form
    CHECK(std::abs(c_pm(0.5, 1.0, -1) - cplx(0.23726266464832774479, 0.76257280017261960236)) < 1e-13);
    CHECK(std::abs(c_pm(0.05, 3.0, -1) - cplx(1.2633714526553832025, -2.1840536386021383419)) < 1e-11);
    CHECK(std::abs(c_pm(2.0, 1.0, -1) - cplx(0.20890010866544359317, 0.39658971906888212578)) < 1e-13);
    // |C_-(1/2)| = e^{pi/2} |Gamma(i)| / pi, |Gamma(i)|^2 = pi / sinh(pi)
    CHECK(std::abs(c_pm(0.5, 1.0, -1)) == doctest::Approx(std::exp(pi / 2) * std::sqrt(pi / std::sinh(pi)) / pi).epsilon(1e-13));

    for (double s : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(std::abs(c_pm(s, 1.0, 1) - std::conj(c_pm(s, 1.0, -1))) <= 1e-14 * std::abs(c_pm(s, 1.0, 1)));
        CHECK(std::abs(c_pm0(s, 1.0, 1)) * std::sqrt(pi * s) == doctest::Approx(1.0).epsilon(1e-14));
        double arg = std::arg(c_pm0(s, 1.0, 1)) - pi / 4 - (1.0 / s) * (std::log(2 * s) + 0.5);
        CHECK(std::abs(std::remainder(arg, 2 * pi)) < 1e-10);
    }
    double lo = 1e300, hi = 0;
    for (double s = 0.02; s <= 2.0; s += 0.01) {
        double m = std::abs(c_pm(s, 1.0, -1)) * std::sqrt(s);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    CHECK(lo > 0.3);
    CHECK(hi < 1.0);
}

TEST_CASE("small-r limits cancel against C")
{
    for (double Z : {1.0, 3.0})
        for (double s : {0.05, 0.3, 1.0, 2.0})
            for (int sign : {1, -1}) {
                cplx target = -double(sign) * I / (pi * std::sqrt(Z));
                CHECK(std::abs(connected_small_r_limit(s, Z, sign) - target) < 1e-11);
                cplx num = c_pm(s, Z, sign) * small_r_limit_w_numeric(s, Z, sign);
                CHECK(std::abs(num - target) < 1e-9);
            }
    CHECK(std::abs(small_r_limit_w(0.4, 1.0, 1) - std::conj(small_r_limit_w(0.4, 1.0, -1))) < 1e-12);
}

TEST_CASE("small-r remainder of w+")
{
    ModelParams p;
    double sigma = 0.7;
    std::vector<double> r{1e-6, 3e-6, 1e-5, 3e-5, 1e-4, 3e-4, 1e-3};
    auto w = outgoing_solution(sigma, p, r);
    cplx lim = small_r_limit_w(sigma, p.Z, 1);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < r.size(); ++i) {
        x.push_back(r[i] * std::log(1 / r[i]));
        y.push_back(std::abs(w[i].u - lim));
    }
    CHECK(loglog_slope(x, y).slope >= 0.9);
}

TEST_CASE("zero energy v+-")
{
    CHECK(std::abs(v_pm(1e-9, 0.0, 1.0, 1) - cplx(0, -1 / pi)) < 1e-6);
    std::vector<double> r, m;
    for (double t = 1e3; t < 1e6; t *= 1.5) {
        r.push_back(t);
        m.push_back(std::abs(v_pm(t, 0.0, 1.0, -1)));
    }
    auto fit = loglog_slope(r, m);
    CHECK(fit.slope == doctest::Approx(0.25).epsilon(0.04));
    CHECK(m.back() == doctest::Approx(std::pow(r.back(), 0.25) / std::sqrt(pi)).epsilon(1e-3));
}

TEST_CASE("U ratio and continuity at zero energy")
{
    auto U = U_ratio(5.0, {0.0, 1e-6, 1e-3}, 1.0);
    CHECK(U[0] == cplx(1.0));
    CHECK(std::abs(U[1] - 1.0) < 1e-4);
    CHECK(std::abs(U[2] - 1.0) < 1e-2);
    for (double r : {1.0, 5.0, 20.0}) {
        cplx v0 = v_pm(r, 0.0, 1.0, 1);
        CHECK(std::abs(v_pm(r, 1e-3, 1.0, 1) - v0) < 1e-3 * std::max(1.0, std::abs(v0)));
    }
}

TEST_CASE("transitional profile")
{
    for (double vs : {0.05, 0.25, 0.5}) {
        cplx a = transitional_profile(vs, 3.0, 1e3), b = transitional_profile(vs, 3.0, 1e4);
        CHECK(std::abs(a - b) < 0.05 * std::abs(b));
        CHECK(std::isfinite(std::abs(b)));
        CHECK(std::abs(transitional_raw(vs, 3.0, 10.0)) > 0.0);
    }
}
