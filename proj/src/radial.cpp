#include "coulres/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coulres/errors.hpp"
#include "coulres/expansion.hpp"
#include "coulres/quadrature.hpp"

namespace coulres {

namespace {

const cplx I(0.0, 1.0);

using QFun = std::function<cplx(double)>;

struct AugState {
    PointValue v;
    cplx J = 0.0;
};

// u'' = -q u together with J' = jsign * g * u
std::vector<AugState> march_aug(const QFun& q, const QFun& g, double jsign, double t0, AugState start,
                                const std::vector<double>& targets, OdeStats* stats, double rtol, double atol,
                                double support_lo, double support_hi)
{
    OdeOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    const double support_cap = (support_hi - support_lo) / 24.0;
    opt.h_max = [q, support_lo, support_hi, support_cap](double t) {
        double k = std::sqrt(std::abs(q(t)));
        double cap = k > 0 ? 0.2 * M_PI / k : std::numeric_limits<double>::infinity();
        if (t >= support_lo && t <= support_hi) cap = std::min(cap, support_cap);
        return cap;
    };
    auto rhs = [&q, &g, jsign](double t, const std::array<double, 6>& y, std::array<double, 6>& dy) {
        cplx u(y[0], y[1]);
        cplx acc = -q(t) * u;
        cplx dj = g ? jsign * g(t) * u : cplx(0.0);
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = acc.real();
        dy[3] = acc.imag();
        dy[4] = dj.real();
        dy[5] = dj.imag();
    };
    std::array<double, 6> y0{start.v.u.real(), start.v.u.imag(), start.v.du.real(),
                             start.v.du.imag(), start.J.real(),  start.J.imag()};
    auto ode = make_dop853<6>(rhs, t0, y0, opt);
    std::vector<AugState> out;
    out.reserve(targets.size());
    for (double t : targets) {
        ode.advance(t);
        const auto& y = ode.y();
        out.push_back({{cplx(y[0], y[1]), cplx(y[2], y[3])}, cplx(y[4], y[5])});
    }
    if (stats) {
        stats->accepted += ode.stats().accepted;
        stats->rejected += ode.stats().rejected;
        stats->evaluations += ode.stats().evaluations;
    }
    return out;
}

cplx wronskian(const PointValue& a, const PointValue& b)
{
    return a.u * b.du - a.du * b.u;
}

void check_grid(const std::vector<double>& r)
{
    if (r.empty()) throw DomainError("grid is empty");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0)) throw DomainError("grid points must be positive");
        if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("grid must be strictly increasing");
    }
}

double frobenius_start(double Z, double rmin)
{
    return std::min(1e-4 * std::min(1.0, 1.0 / Z), 0.5 * rmin);
}

PointValue zero_energy_outgoing(double r, double Z, int sign)
{
    double x = 2.0 * std::sqrt(Z * r);
    cplx h1 = sign > 0 ? hankel1_1(x) : hankel2_1(x);
    cplx h0 = sign > 0 ? hankel1_0(x) : hankel2_0(x);
    cplx dh1 = h0 - h1 / x;
    double sr = std::sqrt(r);
    return {sr * h1, h1 / (2.0 * sr) + std::sqrt(Z) * dh1};
}

// Green's function assembly shared by the shifted and unshifted solves.
struct GreenInputs {
    QFun q;
    QFun g;  // forcing
    double r_min, r_max;
    double reg_t0;
    PointValue reg_start;
    // outgoing solution at descending radii, all >= r_max
    std::function<std::vector<PointValue>(const std::vector<double>&)> outgoing;
};

SolveResult green_solve(const GreenInputs& in, const std::vector<double>& grid)
{
    const double rtol = 1e-12, atol = 1e-14;
    OdeStats stats;
    SolveResult res;
    res.r_grid = grid;
    const std::size_t n = grid.size();
    res.u.assign(n, 0.0);
    res.du.assign(n, 0.0);

    // regular solution and J1 = int u_reg g, outward up to r_max
    std::vector<double> out_targets;
    for (double r : grid)
        if (r < in.r_max) out_targets.push_back(r);
    out_targets.push_back(in.r_min);
    out_targets.push_back(in.r_max);
    std::sort(out_targets.begin(), out_targets.end());
    out_targets.erase(std::unique(out_targets.begin(), out_targets.end()), out_targets.end());
    out_targets.erase(std::remove_if(out_targets.begin(), out_targets.end(),
                                     [&](double r) { return r <= in.reg_t0; }),
                      out_targets.end());
    auto reg = march_aug(in.q, in.g, 1.0, in.reg_t0, {in.reg_start, 0.0}, out_targets, &stats, rtol, atol,
                         in.r_min, in.r_max);
    auto reg_at = [&](double r) -> const AugState& {
        auto it = std::lower_bound(out_targets.begin(), out_targets.end(), r);
        return reg[std::size_t(it - out_targets.begin())];
    };

    // outgoing solution beyond the support, then inward through it with J2
    std::vector<double> far;
    for (double r : grid)
        if (r > in.r_max) far.push_back(r);
    std::reverse(far.begin(), far.end());
    far.push_back(in.r_max);
    auto far_vals = in.outgoing(far);
    PointValue out_rmax = far_vals.back();

    std::vector<double> in_targets;
    for (double r : grid)
        if (r >= in.r_min && r < in.r_max) in_targets.push_back(r);
    in_targets.push_back(in.r_min);
    std::sort(in_targets.begin(), in_targets.end(), std::greater<>());
    in_targets.erase(std::unique(in_targets.begin(), in_targets.end()), in_targets.end());
    auto outv = march_aug(in.q, in.g, -1.0, in.r_max, {out_rmax, 0.0}, in_targets, &stats, rtol, atol, in.r_min,
                          in.r_max);
    auto out_at = [&](double r) -> const AugState& {
        auto it = std::find(in_targets.begin(), in_targets.end(), r);
        return outv[std::size_t(it - in_targets.begin())];
    };

    const AugState& reg_max = reg_at(in.r_max);
    cplx W = wronskian(reg_max.v, out_rmax);
    if (std::abs(W) == 0.0) throw DomainError("resolvent: degenerate Wronskian");
    double drift = 0.0;
    for (std::size_t i = 0; i < in_targets.size(); ++i)
        drift = std::max(drift, std::abs(wronskian(reg_at(in_targets[i]).v, outv[i].v) - W) / std::abs(W));
    const cplx J1tot = reg_max.J;
    const cplx J2tot = out_at(in.r_min).J;

    std::size_t k_far = far_vals.size() - 1;  // far_vals is descending; grid ascending
    for (std::size_t i = 0; i < n; ++i) {
        double r = grid[i];
        if (r < in.r_min) {
            const PointValue& ur = reg_at(r).v;
            res.u[i] = -(ur.u * J2tot) / W;
            res.du[i] = -(ur.du * J2tot) / W;
        } else if (r < in.r_max) {
            const AugState& a = reg_at(r);
            const AugState& b = out_at(r);
            res.u[i] = -(b.v.u * a.J + a.v.u * b.J) / W;
            res.du[i] = -(b.v.du * a.J + a.v.du * b.J) / W;
        } else if (r == in.r_max) {
            res.u[i] = -(out_rmax.u * J1tot) / W;
            res.du[i] = -(out_rmax.du * J1tot) / W;
        } else {
            const PointValue& uo = far_vals[--k_far];
            res.u[i] = -(uo.u * J1tot) / W;
            res.du[i] = -(uo.du * J1tot) / W;
        }
    }
    res.wronskian = W;
    res.wronskian_drift = drift;
    res.method_meta = {Method::ode_march, int(stats.accepted), drift + rtol};
    return res;
}

}  // namespace

std::vector<double> log_grid(double a, double b, int n)
{
    if (n < 2 || !(a > 0.0) || !(b > a)) throw DomainError("log_grid: need 0 < a < b and n >= 2");
    std::vector<double> g(n);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) g[i] = std::exp(la + (lb - la) * i / (n - 1));
    g.front() = a;
    g.back() = b;
    return g;
}

Forcing bump_forcing(double r_min, double r_max, cplx amplitude, std::vector<double> poly)
{
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("bump: need 0 < r_min < r_max");
    Forcing f;
    f.r_min = r_min;
    f.r_max = r_max;
    f.eval = [=](double r) -> cplx {
        double s = (2.0 * r - (r_min + r_max)) / (r_max - r_min);
        if (std::abs(s) >= 1.0) return 0.0;
        double p = 1.0, pw = 1.0;
        for (double c : poly) {
            pw *= s;
            p += c * pw;
        }
        return amplitude * p * std::exp(-1.0 / (1.0 - s * s));
    };
    f.description = "bump";
    return f;
}

Forcing zero_forcing(double r_min, double r_max)
{
    Forcing f;
    f.r_min = r_min;
    f.r_max = r_max;
    f.eval = [](double) { return cplx(0.0); };
    f.description = "zero";
    return f;
}

Forcing combine(cplx alpha, const Forcing& f, cplx beta, const Forcing& g)
{
    Forcing h;
    h.r_min = std::min(f.r_min, g.r_min);
    h.r_max = std::max(f.r_max, g.r_max);
    auto fe = f.eval, ge = g.eval;
    h.eval = [=](double r) { return alpha * fe(r) + beta * ge(r); };
    h.description = "combination";
    return h;
}

FrobeniusData frobenius(double sigma, double Z, double lambda, double r)
{
    const double root = std::sqrt(0.25 + lambda);
    const double s1 = 0.5 + root, s2 = 0.5 - root;
    const double gap = s1 - s2;
    const int N = int(std::lround(gap));
    const bool log_case = std::abs(gap - N) < 1e-12;
    const double s2sq = sigma * sigma;
    const int max_terms = 400;

    std::vector<double> c(max_terms, 0.0), d(max_terms, 0.0);
    c[0] = 1.0;
    d[0] = 1.0;
    double A = 0.0;
    FrobeniusData out;
    out.s1 = s1;

    // regular solution
    double u = 0.0, du = 0.0;
    int n = 0;
    for (; n < max_terms; ++n) {
        if (n > 0) {
            double prev2 = n >= 2 ? c[n - 2] : 0.0;
            c[n] = -(Z * c[n - 1] + s2sq * prev2) / ((n + s1) * (n + s1 - 1.0) - lambda);
        }
        double term = c[n] * std::pow(r, n + s1);
        u += term;
        du += (n + s1) * c[n] * std::pow(r, n + s1 - 1.0);
        if (n > 2 && std::abs(term) < 1e-18 * std::abs(u) && std::abs(c[n - 1] * std::pow(r, n - 1 + s1)) < 1e-17 * std::abs(u))
            break;
    }
    out.reg = {u, du};
    out.terms = n + 1;

    // second solution, A u1 log r + sum d_n r^{n+s2}
    double v = 0.0, dv = 0.0;
    int m = 0;
    for (; m < max_terms; ++m) {
        if (m > 0) {
            double prev2 = m >= 2 ? d[m - 2] : 0.0;
            double P = (m + s2) * (m + s2 - 1.0) - lambda;
            if (log_case && m == N) {
                A = -(Z * d[m - 1] + s2sq * prev2) / (2.0 * s1 - 1.0);
                d[m] = 0.0;
            } else {
                double src = Z * d[m - 1] + s2sq * prev2;
                if (log_case && m > N) src += A * c[m - N] * (2.0 * (m - N + s1) - 1.0);
                d[m] = -src / P;
            }
        }
        double term = d[m] * std::pow(r, m + s2);
        v += term;
        dv += (m + s2) * d[m] * std::pow(r, m + s2 - 1.0);
        if (m > N + 2 && std::abs(term) < 1e-18 * std::abs(v) &&
            std::abs(d[m - 1] * std::pow(r, m - 1 + s2)) < 1e-17 * std::abs(v))
            break;
    }
    if (A != 0.0) {
        double lr = std::log(r);
        v += A * u * lr;
        dv += A * (du * lr + u / r);
    }
    out.second = {v, dv};
    out.terms = std::max(out.terms, m + 1);
    return out;
}

HomogeneousPair integrate_homogeneous(double sigma, const ModelParams& p, Direction dir,
                                      const std::vector<double>& r_grid, const HomogeneousOptions& opt)
{
    check_grid(r_grid);
    if (!(p.Z > 0.0)) throw DomainError("Z must be positive");
    if (sigma < 0.0) throw DomainError("sigma must be nonnegative");
    const double Z = p.Z * opt.coulomb_scale;
    LineCoeffs c{sigma * sigma, Z, -p.lambda_ang};
    OdeOptions oo;
    oo.rtol = opt.rtol;
    oo.atol = opt.atol;
    HomogeneousPair hp;
    hp.r = r_grid;

    if (dir == Direction::outward) {
        double r0 = frobenius_start(std::max(Z, 1e-300), r_grid.front());
        auto fr = frobenius(sigma, Z, p.lambda_ang, r0);
        hp.u1 = march(c, r0, fr.reg, r_grid, &hp.stats, oo);
        hp.u2 = march(c, r0, fr.second, r_grid, &hp.stats, oo);
        hp.anchor_r = r0;
    } else {
        if (p.lambda_ang != 0.0) throw DomainError("inward anchor needs lambda_ang = 0");
        std::vector<double> desc(r_grid.rbegin(), r_grid.rend());
        double rA = r_grid.back();
        PointValue a1, a2;
        if (sigma > 0.0) {
            while (!bf_series_w_adaptive(rA, sigma, Z, +1, 1e-16, a1)) {
                rA *= 1.25;
                if (rA > 1e12) throw AccuracyError("inward anchor: closed-form expansion never converges");
            }
            bf_series_w_adaptive(rA, sigma, Z, -1, 1e-16, a2);
        } else {
            if (opt.coulomb_scale == 0.0) throw DomainError("sigma = 0 needs the Coulomb term");
            a1 = zero_energy_outgoing(rA, Z, +1);
            a2 = zero_energy_outgoing(rA, Z, -1);
        }
        auto v1 = march(c, rA, a1, desc, &hp.stats, oo);
        auto v2 = march(c, rA, a2, desc, &hp.stats, oo);
        hp.u1.assign(v1.rbegin(), v1.rend());
        hp.u2.assign(v2.rbegin(), v2.rend());
        hp.anchor_r = rA;
    }
    hp.wronskian = wronskian(hp.u1.front(), hp.u2.front());
    for (std::size_t i = 0; i < hp.r.size(); ++i)
        hp.wronskian_drift = std::max(hp.wronskian_drift,
                                      std::abs(wronskian(hp.u1[i], hp.u2[i]) - hp.wronskian) / std::abs(hp.wronskian));
    return hp;
}

OutgoingPair outgoing_pair(double sigma, const ModelParams& p, const std::vector<double>& r_grid)
{
    if (!(sigma > 0.0)) throw DomainError("outgoing_pair: sigma must be positive");
    if (!(p.Z > 0.0)) throw DomainError("Z must be positive");
    for (double r : r_grid)
        if (!(r > 0.0)) throw DomainError("grid points must be positive");
    AsymptoticSolution sol({sigma * sigma, p.Z, -p.lambda_ang}, cplx(0.0, -sigma));
    OutgoingPair op;
    op.r = r_grid;
    op.anchor = sol.anchor();
    op.w_minus = sol.eval(r_grid, &op.stats);
    op.w_plus.reserve(r_grid.size());
    for (const auto& v : op.w_minus) op.w_plus.push_back({std::conj(v.u), std::conj(v.du)});
    if (!r_grid.empty()) {
        op.wronskian = wronskian(op.w_plus.front(), op.w_minus.front());
        for (std::size_t i = 0; i < r_grid.size(); ++i)
            op.wronskian_drift = std::max(op.wronskian_drift,
                                          std::abs(wronskian(op.w_plus[i], op.w_minus[i]) - op.wronskian) /
                                              std::abs(op.wronskian));
    }
    return op;
}

std::vector<PointValue> outgoing_solution(double sigma, const ModelParams& p, const std::vector<double>& r)
{
    if (sigma > 0.0) return outgoing_pair(sigma, p, r).w_plus;
    if (p.lambda_ang != 0.0) throw DomainError("zero-energy outgoing solution needs lambda_ang = 0");
    std::vector<PointValue> out;
    out.reserve(r.size());
    for (double v : r) out.push_back(zero_energy_outgoing(v, p.Z, +1));
    return out;
}

SolveResult resolvent_apply(const Forcing& f, double sigma, const ModelParams& p, const std::vector<double>& r_grid)
{
    check_grid(r_grid);
    if (!(f.r_min > 0.0) || !(f.r_max > f.r_min)) throw DomainError("forcing support must lie in (0, inf)");
    if (sigma < 0.0) throw DomainError("sigma must be nonnegative");
    if (p.a00 != 0.0) {
        auto red = reduce_a(p.a00, p.Z, sigma, f);
        ModelParams p0 = p;
        p0.Z = red.Z_eff;
        p0.a00 = 0.0;
        std::vector<double> g0;
        g0.reserve(r_grid.size());
        for (double r : r_grid) g0.push_back(red.r0_of_r(r));
        SolveResult res = resolvent_apply(red.f0, sigma, p0, g0);
        res.r_grid = r_grid;
        res.u0 = extract_u0(res, sigma, p, +1);
        return res;
    }
    GreenInputs in;
    LineCoeffs c{sigma * sigma, p.Z, -p.lambda_ang};
    in.q = [c](double r) { return c.q(r); };
    in.g = f.eval;
    in.r_min = f.r_min;
    in.r_max = f.r_max;
    in.reg_t0 = frobenius_start(p.Z, std::min(r_grid.front(), f.r_min));
    in.reg_start = frobenius(sigma, p.Z, p.lambda_ang, in.reg_t0).reg;
    in.outgoing = [sigma, p](const std::vector<double>& r) { return outgoing_solution(sigma, p, r); };
    SolveResult res = green_solve(in, r_grid);
    res.u0 = extract_u0(res, sigma, p, +1);
    return res;
}

ReducedProblem reduce_a(double a, double Z, double sigma, const Forcing& f)
{
    if (a < 0.0) throw DomainError("reduce_a: coefficient must be nonnegative");
    ReducedProblem rp;
    rp.a = a;
    rp.sigma = sigma;
    rp.Z_eff = Z - sigma * sigma * a;
    if (!(rp.Z_eff > 0.0)) throw AttractivityError("reduce_a: Z - sigma^2 a <= 0");
    rp.f0.r_min = f.r_min + a;
    rp.f0.r_max = f.r_max + a;
    auto fe = f.eval;
    rp.f0.eval = [fe, a](double r0) { return ((r0 - a) / r0) * fe(r0 - a); };
    rp.f0.description = f.description + " (reduced)";
    return rp;
}

namespace {

// e^{s0 r} sum a_m r^{nu - m} for u'' + q u = 0 with q = sum_j q_j r^{-j}
bool generic_formal_series(const std::vector<cplx>& qj, cplx s0, double r, double tol, PointValue& out)
{
    const cplx nu = -qj[1] / (2.0 * s0);
    std::vector<cplx> a{1.0};
    cplx S = 1.0, dS = 0.0;  // sum a_m r^{-m}, d/dr
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 1; m < int(qj.size()) - 1; ++m) {
        cplx v = a[m - 1] * (nu - double(m) + 1.0) * (nu - double(m));
        for (int j = 2; j <= m + 1; ++j) v += qj[j] * a[m + 1 - j];
        a.push_back(v / (2.0 * s0 * double(m)));
        cplx term = a[m] * std::pow(r, -double(m));
        double mag = std::abs(term);
        S += term;
        dS += -double(m) * term / r;
        if (mag < 0.1 * tol * std::abs(S)) {
            cplx pre = std::exp(s0 * r + nu * std::log(r));
            out.u = pre * S;
            out.du = out.u * (s0 + nu / r) + pre * dS;
            return true;
        }
        if (mag > prev) return false;
        prev = mag;
    }
    return false;
}

}  // namespace

SolveResult resolvent_apply_direct(const Forcing& f, double sigma, double Z, double a, const std::vector<double>& r_grid)
{
    check_grid(r_grid);
    if (!(sigma > 0.0)) throw DomainError("direct solve needs sigma > 0");
    if (a < 0.0) throw DomainError("coefficient must be nonnegative");
    const double Z_eff = Z - sigma * sigma * a;
    if (!(Z_eff > 0.0)) throw AttractivityError("Z - sigma^2 a <= 0");
    const double s2 = sigma * sigma;

    GreenInputs in;
    in.q = [s2, Z, a](double r) { return cplx((s2 * r + Z) / (r + a)); };
    auto fe = f.eval;
    in.g = [fe, a](double r) { return (r / (r + a)) * fe(r); };
    in.r_min = f.r_min;
    in.r_max = f.r_max;
    // regular singular point of the unshifted equation at r = -a
    double s_start = frobenius_start(Z_eff, std::min(r_grid.front(), f.r_min) + a);
    in.reg_t0 = s_start - a;
    in.reg_start = frobenius(sigma, Z_eff, 0.0, s_start).reg;

    // q_j of the expansion in 1/r, valid for r > a
    const int J = 160;
    std::vector<cplx> qj(J + 2, 0.0);
    qj[0] = s2;
    for (int j = 1; j <= J + 1; ++j) qj[j] = s2 * std::pow(-a, j) + Z * std::pow(-a, j - 1);
    in.outgoing = [qj, sigma, in_q = in.q](const std::vector<double>& desc) {
        double rA = std::max(desc.front(), 1.0);
        PointValue anchor;
        while (!generic_formal_series(qj, cplx(0.0, sigma), rA, 1e-14, anchor)) {
            rA *= 1.25;
            if (rA > 1e12) throw AccuracyError("direct solve: no anchor for the outgoing series");
        }
        OdeOptions opt;
        opt.h_max = [in_q](double t) { return 0.2 * M_PI / std::sqrt(std::abs(in_q(t))); };
        auto rhs = [in_q](double t, const std::array<double, 4>& y, std::array<double, 4>& dy) {
            cplx acc = -in_q(t) * cplx(y[0], y[1]);
            dy = {y[2], y[3], acc.real(), acc.imag()};
        };
        auto ode = make_dop853<4>(rhs, rA, {anchor.u.real(), anchor.u.imag(), anchor.du.real(), anchor.du.imag()},
                                  opt);
        std::vector<PointValue> out;
        for (double r : desc) {
            ode.advance(r);
            const auto& y = ode.y();
            out.push_back({cplx(y[0], y[1]), cplx(y[2], y[3])});
        }
        return out;
    };
    return green_solve(in, r_grid);
}

std::function<cplx(double)> model_solve(double l, double k, std::function<cplx(double)> f0, cplx c)
{
    return [=](double xh) -> cplx {
        if (!(xh > 0.0)) throw DomainError("model_solve: xhat must be positive");
        auto integrand = [&](double s) { return std::pow(s, l - 0.5) * std::pow(1.0 + s, k + 0.25) * f0(s); };
        cplx integral = integrate_gk<cplx>(integrand, xh, 1.0, 1e-13, 1e-12, 20000).value;
        return std::pow(xh, -l - 0.5) * std::pow(1.0 + xh, -k - 0.25) * (c + 0.5 * I * integral);
    };
}

double normal_integral(const std::function<double(double, double)>& g, double x, double sigma, double xbar)
{
    if (!(x > 0.0) || !(xbar > 0.0)) throw DomainError("normal_integral: non-integrable singularity at x0 = 0");
    auto integrand = [&](double t) { return g(std::exp(t), sigma); };
    return integrate_gk<double>(integrand, std::log(x), std::log(xbar), 1e-14, 1e-13, 20000).value;
}

}  // namespace coulres
