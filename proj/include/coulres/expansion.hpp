// Closed-form asymptotic expansions, u0 extraction and polyhomogeneous fits.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coulres/geometry.hpp"
#include "coulres/line_ode.hpp"
#include "coulres/radial.hpp"

namespace coulres {

enum class Face { bf, tf, zf };

const char* face_name(Face f);

struct ExpansionTerm {
    double k = 0.0;  // exponent
    int kappa = 0;   // log power
    cplx coeff = 0.0;
};

struct ExpansionSeries {
    Face face = Face::bf;
    std::vector<ExpansionTerm> terms;  // sorted by (k, kappa)
    IndexSet index_set;
    double truncation_order = 0.0;
};

struct FitReport {
    ExpansionSeries fitted_coeffs;
    double remainder_exponent = 0.0;
    std::pair<double, double> remainder_exponent_ci{0.0, 0.0};
    // one flag per fitted term; only terms with kappa > 0 can be flagged
    std::vector<bool> log_detected;
    double residual_norm = 0.0;
    double condition = 0.0;
};

// ---- large-r expansion of w+- (sign = +1 / -1) ----

// k-th correction b_k r^{-k} without the oscillatory prefactor (k >= 1).
cplx bf_term(double r, double sigma, double Z, int k, int sign);
// prefactor * [1 + sum_{k=1}^{K-1} b_k r^{-k}]
cplx bf_series_w(double r, double sigma, double Z, int K, int sign);
cplx bf_prefactor(double r, double sigma, double Z, int sign);
// As many terms as needed for relative accuracy tol; false if the terms
// start growing first. Returns value and r-derivative.
bool bf_series_w_adaptive(double r, double sigma, double Z, int sign, double tol, PointValue& out,
                          int* terms = nullptr);

// ---- zero-energy expansion of v+-(r; 0) ----

// Coefficient c_k with term (+-i)^k c_k (Zr)^{-k/2}: the Hankel coefficients
// a_k(1)/2^k.
double tf_coefficient(int k);
// The table value (2k+1)!(2k)!/(64^k (k!)^3); equal to tf_coefficient for k <= 1 only.
double tf_coefficient_literal(int k);
cplx tf_prefactor(double r, double Z, int sign);
cplx tf_series_v0(double r, double Z, int K, int sign);
cplx tf_series_v0_literal(double r, double Z, int K, int sign);

// ---- u0 decomposition ----

// e^{-+ i Phi} x^{-(n-1)/2} (E + Z x)^{1/4} u with x = 1/r
std::vector<cplx> extract_u0(const std::vector<double>& r, const std::vector<cplx>& u, double sigma,
                             const ModelParams& p, int sign);
std::vector<cplx> extract_u0(const SolveResult& result, double sigma, const ModelParams& p, int sign);
// inverse of extract_u0
std::vector<cplx> restore_u(const std::vector<double>& r, const std::vector<cplx>& u0, double sigma,
                            const ModelParams& p, int sign);

// ---- fitting ----

struct LogLogSlope {
    double slope = 0.0, stderr_ = 0.0, intercept = 0.0;
};

// least-squares slope of log|y| against log x (nonzero y only)
LogLogSlope loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct FitOptions {
    double exponent_step = 1.0;    // term (k, kappa) is rho^{k step} log^kappa rho
    double condition_cap = 1e10;   // on the column-normalized design matrix
    double log_ratio = 10.0;       // residual degradation that flags a log term
};

// Least-squares fit of sum c_{k,kappa} rho^{k step} log^kappa rho over the
// members of index_set with k <= max_order.
FitReport fit_polyhomog(const std::vector<double>& rho, const std::vector<cplx>& samples, Face face,
                        int max_order, const IndexSet& index_set, const FitOptions& opt = {});

cplx evaluate(const ExpansionSeries& s, double rho);

// geometric grid start, start*ratio, ... (n points)
std::vector<double> geometric_grid(double start, double ratio, int n);

struct ZfTaylorResult {
    ExpansionSeries series;             // coefficients at the first x of the window
    std::vector<std::vector<cplx>> w;   // w[k][j]: E^k coefficient at x_j
    FitReport report;                   // remainder_exponent is the E-exponent after K terms
    std::vector<double> E, remainder;   // remainder curve max_j |R(E)|
};

struct ZfTaylorOptions {
    double E_max = 0.02;
    double ratio = 0.8;
    int n_E = 24;
    int extra_degree = 3;  // fitted polynomial degree is K + extra_degree
};

// u_family(E) returns samples on a fixed x-window; E = 0 is included.
ZfTaylorResult zf_taylor(const std::function<std::vector<cplx>(double)>& u_family, int K,
                         const ZfTaylorOptions& opt = {});

// Oscillatory factor of the uniform bf expansion in rho = (sigma^2 r + 1)^{-1} (n = 1).
cplx bf_uniform_prefactor(double rho, double sigma, double Z, int sign);

struct BfUniformReport {
    std::vector<double> sigmas;
    std::vector<FitReport> fits;          // tau_k per sigma
    double tau0_min = 0.0, tau0_max = 0.0;
};

// u_family(r, sigma) sampled at r = (1 - rho)/(rho sigma^2) for rho on a
// geometric grid toward 0; fits tau_k after dividing out the prefactor and
// the sigma^{-1/2} weight.
BfUniformReport bf_uniform_check(const std::function<std::vector<cplx>(const std::vector<double>&, double)>& u_family,
                                 const std::vector<double>& sigmas, double Z, int K, int sign,
                                 const std::vector<double>& rho_grid);

}  // namespace coulres
