#include "coulres/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "coulres/errors.hpp"

namespace coulres {

namespace {
const cplx I(0.0, 1.0);
}

const char* face_name(Face f)
{
    switch (f) {
        case Face::bf: return "bf";
        case Face::tf: return "tf";
        case Face::zf: return "zf";
    }
    return "unknown";
}

// ---- bf ----

namespace {

// ratio b_k r^{-k} / (b_{k-1} r^{-(k-1)})
cplx bf_ratio(double r, double sigma, double Z, int k, int sign)
{
    const cplx si = double(sign) * I;
    cplx num = si * (Z + 2.0 * k * sigma * si) * (Z + 2.0 * (k - 1) * sigma * si);
    return num / (8.0 * k * sigma * sigma * sigma * r);
}

}  // namespace

cplx bf_term(double r, double sigma, double Z, int k, int sign)
{
    if (k < 1) throw DomainError("bf_term: k >= 1");
    cplx t = 1.0;
    for (int j = 1; j <= k; ++j) t *= bf_ratio(r, sigma, Z, j, sign);
    return t;
}

cplx bf_prefactor(double r, double sigma, double Z, int sign)
{
    return std::exp(double(sign) * I * (sigma * r + (Z / (2.0 * sigma)) * std::log(r)));
}

cplx bf_series_w(double r, double sigma, double Z, int K, int sign)
{
    if (!(sigma > 0.0) || K < 1) throw DomainError("bf_series_w: need sigma > 0, K >= 1");
    cplx s = 1.0, t = 1.0;
    for (int k = 1; k < K; ++k) {
        t *= bf_ratio(r, sigma, Z, k, sign);
        s += t;
    }
    return bf_prefactor(r, sigma, Z, sign) * s;
}

bool bf_series_w_adaptive(double r, double sigma, double Z, int sign, double tol, PointValue& out, int* terms)
{
    cplx s = 1.0, ds = 0.0, t = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 400; ++k) {
        t *= bf_ratio(r, sigma, Z, k, sign);
        double mag = std::abs(t);
        if (mag > prev) return false;
        prev = mag;
        s += t;
        ds += -double(k) * t / r;
        if (mag < 0.1 * tol) {
            cplx P = bf_prefactor(r, sigma, Z, sign);
            out.u = P * s;
            out.du = P * (double(sign) * I * (sigma + Z / (2.0 * sigma * r)) * s + ds);
            if (terms) *terms = k + 1;
            return true;
        }
    }
    return false;
}

// ---- tf ----

double tf_coefficient(int k)
{
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c *= (4.0 - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (16.0 * j);
    return c;
}

double tf_coefficient_literal(int k)
{
    double c = 1.0;
    for (int j = 1; j <= k; ++j)
        c *= (2.0 * j + 1.0) * (2.0 * j) * (2.0 * j) * (2.0 * j - 1.0) / (64.0 * j * j * j);
    return c;
}

cplx tf_prefactor(double r, double Z, int sign)
{
    double amp = std::pow(r, 0.25) / (std::sqrt(M_PI) * std::pow(Z, 0.25));
    return amp * std::exp(double(sign) * I * (2.0 * std::sqrt(Z * r) - 0.75 * M_PI));
}

namespace {

cplx tf_sum(double r, double Z, int K, int sign, double (*coef)(int))
{
    if (K < 1) throw DomainError("tf_series_v0: K >= 1");
    const cplx si = double(sign) * I;
    const double base = 1.0 / std::sqrt(Z * r);
    cplx s = 0.0, pw = 1.0;
    for (int k = 0; k < K; ++k) {
        s += coef(k) * pw;
        pw *= si * base;
    }
    return tf_prefactor(r, Z, sign) * s;
}

}  // namespace

cplx tf_series_v0(double r, double Z, int K, int sign)
{
    return tf_sum(r, Z, K, sign, tf_coefficient);
}

cplx tf_series_v0_literal(double r, double Z, int K, int sign)
{
    return tf_sum(r, Z, K, sign, tf_coefficient_literal);
}

// ---- u0 ----

namespace {

cplx u0_factor(double r, double sigma, const ModelParams& p, int sign)
{
    double x = 1.0 / r;
    cplx ph = phase(x, sigma, p);
    double w = std::pow(x, -0.5 * (p.n - 1)) * std::pow(sigma * sigma + p.Z * x, 0.25);
    return std::exp(-double(sign) * I * ph) * w;
}

}  // namespace

std::vector<cplx> extract_u0(const std::vector<double>& r, const std::vector<cplx>& u, double sigma,
                             const ModelParams& p, int sign)
{
    if (r.size() != u.size()) throw DomainError("extract_u0: size mismatch");
    std::vector<cplx> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = u0_factor(r[i], sigma, p, sign) * u[i];
    return out;
}

std::vector<cplx> extract_u0(const SolveResult& result, double sigma, const ModelParams& p, int sign)
{
    return extract_u0(result.r_grid, result.u, sigma, p, sign);
}

std::vector<cplx> restore_u(const std::vector<double>& r, const std::vector<cplx>& u0, double sigma,
                            const ModelParams& p, int sign)
{
    std::vector<cplx> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = u0[i] / u0_factor(r[i], sigma, p, sign);
    return out;
}

// ---- fitting ----

LogLogSlope loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    const std::size_t n = lx.size();
    if (n < 3) throw AccuracyError("loglog_slope: fewer than three usable points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    LogLogSlope out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = ly[i] - out.intercept - out.slope * lx[i];
        ss += e * e;
    }
    out.stderr_ = std::sqrt(ss / double(n - 2) / sxx);
    return out;
}

namespace {

struct LsqFit {
    std::vector<cplx> coeff;
    std::vector<cplx> residual;
    double rms = 0.0, condition = 0.0;
};

LsqFit lsq(const std::vector<double>& rho, const std::vector<cplx>& samples,
           const std::vector<std::pair<int, int>>& terms, double step, double cap)
{
    const int m = int(rho.size()), p = int(terms.size());
    if (m < p) throw AccuracyError("fit: more terms than samples");
    Eigen::MatrixXd A(m, p);
    for (int i = 0; i < m; ++i) {
        double lr = std::log(rho[i]);
        for (int j = 0; j < p; ++j) A(i, j) = std::pow(rho[i], terms[j].first * step) * std::pow(lr, terms[j].second);
    }
    Eigen::VectorXd scale(p);
    for (int j = 0; j < p; ++j) {
        scale(j) = A.col(j).norm();
        if (scale(j) == 0.0) scale(j) = 1.0;
        A.col(j) /= scale(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    LsqFit out;
    out.condition = sv(0) / sv(p - 1);
    if (!(out.condition <= cap)) throw AccuracyError("fit: design matrix too ill-conditioned; reduce max_order");
    Eigen::VectorXd br(m), bi(m);
    for (int i = 0; i < m; ++i) {
        br(i) = samples[i].real();
        bi(i) = samples[i].imag();
    }
    Eigen::VectorXd xr = svd.solve(br), xi = svd.solve(bi);
    Eigen::VectorXd fr = A * xr, fi = A * xi;
    out.coeff.resize(p);
    for (int j = 0; j < p; ++j) out.coeff[j] = cplx(xr(j), xi(j)) / scale(j);
    out.residual.resize(m);
    double ss = 0.0;
    for (int i = 0; i < m; ++i) {
        out.residual[i] = samples[i] - cplx(fr(i), fi(i));
        ss += std::norm(out.residual[i]);
    }
    out.rms = std::sqrt(ss / m);
    return out;
}

}  // namespace

FitReport fit_polyhomog(const std::vector<double>& rho, const std::vector<cplx>& samples, Face face, int max_order,
                        const IndexSet& index_set, const FitOptions& opt)
{
    if (rho.size() != samples.size()) throw DomainError("fit: size mismatch");
    for (double r : rho)
        if (!(r > 0.0)) throw DomainError("fit: coordinate must be positive");
    auto terms = index_set.pairs(max_order);
    std::sort(terms.begin(), terms.end());
    FitReport rep;
    rep.fitted_coeffs.face = face;
    rep.fitted_coeffs.index_set = index_set;
    rep.fitted_coeffs.truncation_order = max_order * opt.exponent_step;
    if (terms.empty()) throw DomainError("fit: index set has no members up to max_order");
    LsqFit full = lsq(rho, samples, terms, opt.exponent_step, opt.condition_cap);
    for (std::size_t j = 0; j < terms.size(); ++j)
        rep.fitted_coeffs.terms.push_back({terms[j].first * opt.exponent_step, terms[j].second, full.coeff[j]});
    rep.residual_norm = full.rms;
    rep.condition = full.condition;
    rep.log_detected.assign(terms.size(), false);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].second == 0) continue;
        auto reduced = terms;
        reduced.erase(reduced.begin() + long(j));
        LsqFit alt = lsq(rho, samples, reduced, opt.exponent_step, std::numeric_limits<double>::infinity());
        double floor_ = std::max(full.rms, 1e-300);
        rep.log_detected[j] = alt.rms > opt.log_ratio * floor_;
    }
    std::vector<double> mag(full.residual.size());
    for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(full.residual[i]);
    try {
        auto s = loglog_slope(rho, mag);
        rep.remainder_exponent = s.slope;
        rep.remainder_exponent_ci = {s.slope - 2.0 * s.stderr_, s.slope + 2.0 * s.stderr_};
    } catch (const AccuracyError&) {
        // exact fit: no measurable remainder
        rep.remainder_exponent = std::numeric_limits<double>::infinity();
        rep.remainder_exponent_ci = {rep.remainder_exponent, rep.remainder_exponent};
    }
    return rep;
}

cplx evaluate(const ExpansionSeries& s, double rho)
{
    cplx v = 0.0;
    double lr = std::log(rho);
    for (const auto& t : s.terms) v += t.coeff * std::pow(rho, t.k) * std::pow(lr, t.kappa);
    return v;
}

std::vector<double> geometric_grid(double start, double ratio, int n)
{
    std::vector<double> g(n);
    double v = start;
    for (int i = 0; i < n; ++i) {
        g[i] = v;
        v *= ratio;
    }
    return g;
}

ZfTaylorResult zf_taylor(const std::function<std::vector<cplx>(double)>& u_family, int K, const ZfTaylorOptions& opt)
{
    if (K < 0 || opt.n_E < K + opt.extra_degree + 2) throw AccuracyError("zf_taylor: insufficient refinement");
    ZfTaylorResult res;
    std::vector<double> E{0.0};
    for (double e : geometric_grid(opt.E_max, opt.ratio, opt.n_E)) E.push_back(e);
    std::vector<std::vector<cplx>> U;
    for (double e : E) U.push_back(u_family(e));
    const std::size_t J = U.front().size();
    for (const auto& row : U)
        if (row.size() != J) throw DomainError("zf_taylor: family changed its x-window");
    const int D = K + opt.extra_degree;
    const int m = int(E.size());
    Eigen::MatrixXd A(m, D + 1);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= D; ++k) A(i, k) = std::pow(E[i] / opt.E_max, k);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    res.w.assign(D + 1, std::vector<cplx>(J));
    for (std::size_t j = 0; j < J; ++j) {
        Eigen::VectorXd br(m), bi(m);
        for (int i = 0; i < m; ++i) {
            br(i) = U[i][j].real();
            bi(i) = U[i][j].imag();
        }
        Eigen::VectorXd xr = svd.solve(br), xi = svd.solve(bi);
        for (int k = 0; k <= D; ++k) res.w[k][j] = cplx(xr(k), xi(k)) / std::pow(opt.E_max, k);
    }
    for (int i = 1; i < m; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
            cplx t = U[i][j];
            for (int k = 0; k <= K; ++k) t -= res.w[k][j] * std::pow(E[i], k);
            worst = std::max(worst, std::abs(t));
        }
        res.E.push_back(E[i]);
        res.remainder.push_back(worst);
    }
    res.w.resize(K + 1);
    res.series.face = Face::zf;
    res.series.index_set = IndexSet::generated_by({{0, 0}});
    res.series.truncation_order = K;
    for (int k = 0; k <= K; ++k) res.series.terms.push_back({double(k), 0, res.w[k][0]});
    auto s = loglog_slope(res.E, res.remainder);
    res.report.fitted_coeffs = res.series;
    res.report.remainder_exponent = s.slope;
    res.report.remainder_exponent_ci = {s.slope - 2.0 * s.stderr_, s.slope + 2.0 * s.stderr_};
    res.report.log_detected.assign(K + 1, false);
    res.report.condition = svd.singularValues()(0) / svd.singularValues()(D);
    return res;
}

cplx bf_uniform_prefactor(double rho, double sigma, double Z, int sign)
{
    const double q = (1.0 - rho) / rho;
    double ph = (q / sigma) * std::sqrt(1.0 + Z / q);
    double base = std::sqrt(q / Z) + std::sqrt(1.0 + q / Z);
    return std::exp(double(sign) * I * (ph + (Z / sigma) * std::log(base)));
}

BfUniformReport bf_uniform_check(const std::function<std::vector<cplx>(const std::vector<double>&, double)>& u_family,
                                 const std::vector<double>& sigmas, double Z, int K, int sign,
                                 const std::vector<double>& rho_grid)
{
    BfUniformReport rep;
    rep.sigmas = sigmas;
    rep.tau0_min = std::numeric_limits<double>::infinity();
    rep.tau0_max = 0.0;
    std::vector<double> rho = rho_grid;
    std::sort(rho.begin(), rho.end());
    for (double s : sigmas) {
        std::vector<double> r(rho.size());
        for (std::size_t i = 0; i < rho.size(); ++i) r[i] = (1.0 - rho[i]) / (rho[i] * s * s);
        std::vector<double> r_inc(r.rbegin(), r.rend());
        auto u_inc = u_family(r_inc, s);
        std::vector<cplx> samples(rho.size());
        for (std::size_t i = 0; i < rho.size(); ++i) {
            cplx u = u_inc[rho.size() - 1 - i];
            samples[i] = u / (std::pow(s, -0.5) * bf_uniform_prefactor(rho[i], s, Z, sign));
        }
        auto fit = fit_polyhomog(rho, samples, Face::bf, K, IndexSet::generated_by({{0, 0}}));
        double t0 = std::abs(fit.fitted_coeffs.terms.front().coeff);
        rep.tau0_min = std::min(rep.tau0_min, t0);
        rep.tau0_max = std::max(rep.tau0_max, t0);
        rep.fits.push_back(std::move(fit));
    }
    return rep;
}

}  // namespace coulres
