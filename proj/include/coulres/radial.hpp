// Radial Coulomb equation u'' + (sigma^2 + Z/r - lambda/r^2) u = -f.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coulres/geometry.hpp"
#include "coulres/line_ode.hpp"
#include "coulres/specfun.hpp"

namespace coulres {

struct Forcing {
    double r_min = 1.0, r_max = 2.0;
    std::function<cplx(double)> eval;
    std::string description;
};

// amplitude * (1 + c1 s + c2 s^2) * exp(-1/(1 - s^2)) with s mapping the
// support onto (-1, 1)
Forcing bump_forcing(double r_min, double r_max, cplx amplitude = 1.0,
                     std::vector<double> poly = {});
Forcing zero_forcing(double r_min = 1.0, double r_max = 2.0);
Forcing combine(cplx alpha, const Forcing& f, cplx beta, const Forcing& g);

struct SolveResult {
    std::vector<double> r_grid;
    std::vector<cplx> u, du, u0;
    double wronskian_drift = 0.0;
    cplx wronskian = 0.0;
    EvalDiagnostics method_meta;
};

enum class Direction { outward, inward };

struct HomogeneousOptions {
    // multiplies Z in the equation (but not in the expansions); only for tests
    double coulomb_scale = 1.0;
    double rtol = 1e-12, atol = 1e-14;
};

// Two independent solutions on a grid, with W = u1 u2' - u1' u2.
struct HomogeneousPair {
    std::vector<double> r;
    std::vector<PointValue> u1, u2;
    cplx wronskian = 0.0;
    double wronskian_drift = 0.0;
    double anchor_r = 0.0;
    OdeStats stats;
};

// outward: u1 ~ r^{s1} (Frobenius, c0 = 1), u2 the second Frobenius solution,
// both marched from r0 = 1e-4 min(1, 1/Z).
// inward (sigma > 0): u1 = w+, u2 = w-, from the closed-form large-r
// expansion at an adaptively chosen anchor; sigma = 0 uses the zero-energy
// expansion of v+-(r; 0) instead.
HomogeneousPair integrate_homogeneous(double sigma, const ModelParams& p, Direction dir,
                                      const std::vector<double>& r_grid,
                                      const HomogeneousOptions& opt = {});

// Frobenius data at r (small): regular solution ~ r^{s1} and the second one.
struct FrobeniusData {
    PointValue reg, second;
    double s1 = 1.0;
    int terms = 0;
};
FrobeniusData frobenius(double sigma, double Z, double lambda, double r);

struct OutgoingPair {
    std::vector<double> r;
    std::vector<PointValue> w_plus, w_minus;
    cplx wronskian = 0.0;
    double wronskian_drift = 0.0;
    Anchor anchor;
    OdeStats stats;
};

OutgoingPair outgoing_pair(double sigma, const ModelParams& p, const std::vector<double>& r_grid);

// Outgoing solution with its derivative: w+ for sigma > 0, v+(r; 0) for sigma = 0.
std::vector<PointValue> outgoing_solution(double sigma, const ModelParams& p, const std::vector<double>& r);

// Limiting resolvent R(E + i0) applied to f. Nonzero a00 is handled through
// reduce_a.
SolveResult resolvent_apply(const Forcing& f, double sigma, const ModelParams& p,
                            const std::vector<double>& r_grid);

struct ReducedProblem {
    double a = 0.0, sigma = 0.0, Z_eff = 1.0;
    Forcing f0;  // in the variable r0 = r + a
    double r0_of_r(double r) const { return r + a; }
    double r_of_r0(double r0) const { return r0 - a; }
    double x0_of_x(double x) const { return x / (1.0 + a * x); }
};

ReducedProblem reduce_a(double a, double Z, double sigma, const Forcing& f);

// Solve (r + a) u'' + (sigma^2 r + Z) u = -r f directly in r, without the
// coordinate shift; outgoing data from the formal series of the unshifted
// coefficient.
SolveResult resolvent_apply_direct(const Forcing& f, double sigma, double Z, double a,
                                   const std::vector<double>& r_grid);

// xh^{-l-1/2}(1+xh)^{-k-1/4}[c + (i/2) int_xh^1 s^{l-1/2}(1+s)^{k+1/4} f0(s) ds]
std::function<cplx(double)> model_solve(double l, double k, std::function<cplx(double)> f0, cplx c);

// int_x^xbar g(x0, sigma) dx0 / x0
double normal_integral(const std::function<double(double, double)>& g, double x, double sigma, double xbar);

std::vector<double> log_grid(double a, double b, int n);

}  // namespace coulres
