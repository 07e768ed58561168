// Second-order linear ODE u'' + q(t) u = 0 on t > 0 with
// q(t) = alpha + beta/t + gamma/t^2 (complex coefficients).
//
// Both the Whittaker ODE along a ray z = t e^{i theta} and the radial Coulomb
// equation have this form; this header provides the solution that behaves like
// e^{s0 t} t^{nu} (1 + O(1/t)) at infinity together with the marching helpers.
#pragma once

#include <complex>
#include <vector>

#include "coulres/dop853.hpp"

namespace coulres {

using cplx = std::complex<double>;

struct LineCoeffs {
    cplx alpha, beta, gamma;
    cplx q(double t) const { return alpha + beta / t + gamma / (t * t); }
};

struct PointValue {
    cplx u, du;
};

enum class AnchorKind { formal_series, liouville_green };

enum class AnchorPolicy { shortest_march, formal_series_only, liouville_green_only };

struct Anchor {
    double t = 0.0;
    AnchorKind kind = AnchorKind::formal_series;
    int terms = 0;
    double est_err = 0.0;
};

// Default step cap for the oscillatory marches: at least ten steps per local
// wavelength 2 pi / |q|^{1/2}.
double wavelength_cap(const LineCoeffs& c, double t);

// March (u, u') from t0 through the targets, which must be monotone and on one
// side of t0. Returns one value per target.
std::vector<PointValue> march(const LineCoeffs& c, double t0, PointValue start,
                              const std::vector<double>& targets, OdeStats* stats = nullptr,
                              const OdeOptions& opt = {});

// Truncated asymptotic series e^{s0 t} t^{nu} sum_m a_m t^{-m} at t, summed
// until the first omitted term is below tol relative. Returns false if the
// terms stop decreasing first.
bool formal_series_value(const LineCoeffs& c, cplx s0, double t, double tol, PointValue& out,
                         int& terms, double& est_err, int max_terms = 200);

// Local Riccati (WKB) terms y_0..y_N of the log-derivative at t, where
// y_0 = s0 (q/alpha)^{1/2}. Stops at the smallest term or max_order.
std::vector<cplx> riccati_terms(const LineCoeffs& c, cplx s0, double t, int max_order);

class AsymptoticSolution {
public:
    // tol: relative error budget of the anchor data; t_floor: smallest
    // admissible anchor.
    AsymptoticSolution(LineCoeffs c, cplx s0, double tol = 1e-13, double t_floor = 1e-3,
                       AnchorPolicy policy = AnchorPolicy::shortest_march);

    const Anchor& anchor() const { return anchor_; }
    cplx nu() const { return nu_; }

    // Values of u and u' at the requested points (any order, t > 0).
    std::vector<PointValue> eval(const std::vector<double>& t, OdeStats* stats = nullptr) const;

    // Values at t >= anchor().t computed directly from the anchor expansion.
    PointValue direct(double t) const;

private:
    std::vector<PointValue> direct_many(const std::vector<double>& t_desc) const;
    bool try_series(double t, Anchor& a) const;
    bool try_lg(double t, Anchor& a) const;
    cplx lg_integrand(double t) const;

    LineCoeffs c_;
    cplx s0_, nu_;
    double tol_;
    Anchor anchor_;
};

}  // namespace coulres
