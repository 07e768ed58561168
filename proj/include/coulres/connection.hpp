// Connection coefficients C+-(sigma), C+-,0(sigma), the family
// v+-(r; sigma) = C+-(sigma) w+-(r; sigma) and the transitional profile.
//
// sign = +1 / -1 selects the upper / lower choice throughout. Quantities that
// grow like e^{pi Z / 4 sigma} are combined in log space and exponentiated last.
#pragma once

#include <vector>

#include "coulres/line_ode.hpp"

namespace coulres {

struct ConnectionEval {
    double sigma = 0.0;
    cplx C_plus, C_minus, C_plus0, C_minus0;
};

ConnectionEval connection_eval(double sigma, double Z);

// A logarithm of C+-: exp(log_c_pm) == c_pm, imaginary part not reduced.
cplx log_c_pm(double sigma, double Z, int sign);
cplx c_pm(double sigma, double Z, int sign);

cplx log_c_pm0(double sigma, double Z, int sign);
cplx c_pm0(double sigma, double Z, int sign);

// lim_{r -> 0} w+-(r; sigma), closed form.
cplx log_small_r_limit_w(double sigma, double Z, int sign);
cplx small_r_limit_w(double sigma, double Z, int sign);

// The same limit read off the marched solution: w+- = alpha u_reg + beta u_2
// with u_2(0) = 1, so the limit is beta = W(u_reg, w) / W(u_reg, u_2),
// evaluated at r_c with the Frobenius pair.
cplx small_r_limit_w_numeric(double sigma, double Z, int sign, double r_c = 0.0);

// C+- times the numeric small-r limit, multiplied in log space.
cplx connected_small_r_limit(double sigma, double Z, int sign);

// v+-(r; sigma) with derivative; sigma = 0 gives r^{1/2} H_1^{(1,2)}(2 sqrt(Z r)).
std::vector<PointValue> v_pm(const std::vector<double>& r, double sigma, double Z, int sign);
cplx v_pm(double r, double sigma, double Z, int sign);

// U(r; E) = v-(r; E^{1/2}) / v-(r; 0) for each E >= 0.
std::vector<cplx> U_ratio(double r, const std::vector<double>& E, double Z);

// phi(varsigma, r^{1/2}) of the tf phase.
double transitional_phase(double varsigma, double Z, double r_half);

// e^{-pi Z r^{1/2} / 4 varsigma} W_{kappa,1/2}(2 i varsigma r^{1/2}) with
// kappa = -i Z r^{1/2} / (2 varsigma); no phase removed.
cplx transitional_raw(double varsigma, double Z, double r_half);

// varsigma^{-1/2} e^{-i r^{1/2} phi} transitional_raw.
cplx transitional_profile(double varsigma, double Z, double r_half);

}  // namespace coulres
