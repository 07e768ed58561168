// Resolved (x, sigma) coordinates, the phase Phi, index sets and grid
// differentiation.
#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace coulres {

using cplx = std::complex<double>;

struct ModelParams {
    double Z = 1.0;
    double a00 = 0.0;
    double a = 0.0;
    int n = 1;
    double lambda_ang = 0.0;
};

// Z - sigma^2 a00; throws AttractivityError unless positive.
double effective_charge(double sigma, const ModelParams& p);

struct ResolvedPoint {
    double x = 0.0, sigma = 0.0;
    double rho_bf = 0.0, rho_tf = 0.0, rho_zf = 0.0;
    double xhat = 0.0, Ehat = 0.0, varsigma = 0.0;
};

ResolvedPoint resolve(double x, double sigma, double Z);

enum class Regime { interior, near_bf, near_tf, near_zf, corner_bf_tf, corner_tf_zf };

const char* regime_name(Regime r);

struct ClassifyThresholds {
    double bf = 0.05, tf = 0.05, zf = 0.05;
};

Regime classify(const ResolvedPoint& p, const ClassifyThresholds& th = {});

// Below this value of sigma^2/((Z - sigma^2 a00) x) the phase uses its Taylor
// expansion in sigma^2.
constexpr double phase_taylor_threshold = 1e-3;
constexpr int phase_taylor_terms = 6;

cplx phase(double x, double sigma, const ModelParams& p);
cplx phase_direct(double x, double sigma, const ModelParams& p);
cplx phase_taylor(double x, double sigma, const ModelParams& p);
cplx phase_derivative(double x, double sigma, const ModelParams& p);

// d/dx on a strictly increasing grid: 5-point stencils, shifted at the ends.
std::vector<double> differentiate(const std::vector<double>& x, const std::vector<double>& u);
std::vector<cplx> differentiate(const std::vector<double>& x, const std::vector<cplx>& u);

// 2ix(sigma^2+Zx)^{1/2} (x u' - (n-1)/2 u + (Z/4) x/(sigma^2+Zx) u)
std::vector<cplx> normal_operator_apply(const std::vector<double>& x, const std::vector<cplx>& u,
                                        double sigma, const ModelParams& p);

// 2i [xh v' + xh/(1+xh) (k+1/4) v + (l+1/2) v] on an xhat grid
std::vector<cplx> model_operator_apply(const std::vector<double>& xhat, const std::vector<cplx>& v,
                                       double l, double k);

// Index sets that are upward closed in k: for each log power kappa the member
// exponents are k >= kmin(kappa).
class IndexSet {
public:
    static constexpr int absent = std::numeric_limits<int>::max();

    IndexSet();  // empty
    explicit IndexSet(std::function<int(int)> kmin) : kmin_(std::move(kmin)) {}

    static IndexSet generated_by(const std::vector<std::pair<int, int>>& pairs);
    // {(k, kappa) : kappa <= floor(k/2)}
    static IndexSet log_index_set();

    int kmin(int kappa) const { return kappa < 0 ? absent : kmin_(kappa); }
    bool contains(int k, int kappa) const;
    // members with k <= k_max
    std::vector<std::pair<int, int>> pairs(int k_max) const;
    bool empty_up_to(int k_max) const { return pairs(k_max).empty(); }

private:
    std::function<int(int)> kmin_;
};

// F u {(k+1, kappa+1), (k+2, kappa+1) : (k, kappa) in F, k odd}
IndexSet indexset_plus(const IndexSet& f);

}  // namespace coulres
