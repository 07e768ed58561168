// Special functions: complex Gamma, Kummer M, Whittaker M and W, order-0/1
// Bessel and Hankel functions, arcsinh.
#pragma once

#include <complex>
#include <vector>

#include "coulres/line_ode.hpp"

namespace coulres {

enum class Method { power_series, asymptotic_series, ode_march, recurrence, reflection };

const char* method_name(Method m);

struct EvalDiagnostics {
    Method method_used = Method::power_series;
    int terms_used = 1;
    double est_rel_error = 0.0;
};

// Lanczos (g = 607/128, 15 terms) on Re z >= 1/2, reflection below.
cplx log_gamma(cplx z, EvalDiagnostics* diag = nullptr);
cplx gamma(cplx z, EvalDiagnostics* diag = nullptr);

constexpr double kummer_series_max_abs_z = 30.0;
constexpr int kummer_series_max_terms = 500;

// 1F1(a; b; z) by its power series; DomainError when |z| > 30.
cplx kummer_m(cplx a, cplx b, cplx z, EvalDiagnostics* diag = nullptr);

// M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} M(mu+1/2-kappa, 1+2mu, z). Falls back to
// an outward march of Whittaker's ODE when the series loses too much to
// cancellation or |z| is out of the series budget.
cplx whittaker_m(cplx kappa, cplx mu, cplx z, EvalDiagnostics* diag = nullptr);

// Value and z-derivative of M along the ray arg z = theta at the radii t.
std::vector<PointValue> whittaker_m_ray(cplx kappa, cplx mu, double theta,
                                        const std::vector<double>& t,
                                        EvalDiagnostics* diag = nullptr);

// Recessive solution, W ~ e^{-z/2} z^kappa at infinity.
cplx whittaker_w(cplx kappa, cplx mu, cplx z, EvalDiagnostics* diag = nullptr);

// Value and z-derivative of W along a ray; one anchor shared by all radii.
std::vector<PointValue> whittaker_w_ray(cplx kappa, cplx mu, double theta,
                                        const std::vector<double>& t,
                                        EvalDiagnostics* diag = nullptr);

double bessel_j0(double x, EvalDiagnostics* diag = nullptr);
double bessel_j1(double x, EvalDiagnostics* diag = nullptr);
double bessel_y0(double x, EvalDiagnostics* diag = nullptr);
double bessel_y1(double x, EvalDiagnostics* diag = nullptr);
cplx hankel1_1(double x, EvalDiagnostics* diag = nullptr);
cplx hankel2_1(double x, EvalDiagnostics* diag = nullptr);
cplx hankel1_0(double x, EvalDiagnostics* diag = nullptr);
cplx hankel2_0(double x, EvalDiagnostics* diag = nullptr);

// Power series below this argument, Hankel asymptotic expansion above.
constexpr double bessel_crossover = 16.0;

double arcsinh(double t);

}  // namespace coulres
