#include "coulres/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "coulres/errors.hpp"
#include "coulres/specfun.hpp"

namespace coulres {

double effective_charge(double sigma, const ModelParams& p)
{
    double A = p.Z - sigma * sigma * p.a00;
    if (!(A > 0.0)) throw AttractivityError("attractivity violated: Z - sigma^2 a00 <= 0");
    return A;
}

ResolvedPoint resolve(double x, double sigma, double Z)
{
    const double inf = std::numeric_limits<double>::infinity();
    ResolvedPoint p;
    p.x = x;
    p.sigma = sigma;
    double s2 = sigma * sigma, zx = Z * x;
    double den = s2 + zx;
    // the smaller one directly, the other as its complement, so the sum is exactly 1
    if (!(den > 0)) {
        p.rho_bf = 0.0;
        p.rho_zf = 1.0;
    } else if (zx <= s2) {
        p.rho_bf = zx / den;
        p.rho_zf = 1.0 - p.rho_bf;
    } else {
        p.rho_zf = s2 / den;
        p.rho_bf = 1.0 - p.rho_zf;
    }
    p.rho_tf = std::sqrt(den);
    p.xhat = s2 > 0 ? zx / s2 : inf;
    p.Ehat = x > 0 ? s2 / x : inf;
    p.varsigma = x > 0 ? sigma / std::sqrt(x) : inf;
    return p;
}

const char* regime_name(Regime r)
{
    switch (r) {
        case Regime::interior: return "interior";
        case Regime::near_bf: return "near_bf";
        case Regime::near_tf: return "near_tf";
        case Regime::near_zf: return "near_zf";
        case Regime::corner_bf_tf: return "corner_bf_tf";
        case Regime::corner_tf_zf: return "corner_tf_zf";
    }
    return "unknown";
}

Regime classify(const ResolvedPoint& p, const ClassifyThresholds& th)
{
    bool bf = p.rho_bf < th.bf, tf = p.rho_tf < th.tf, zf = p.rho_zf < th.zf;
    if (bf && tf) return Regime::corner_bf_tf;
    if (tf && zf) return Regime::corner_tf_zf;
    if (tf) return Regime::near_tf;
    if (bf) return Regime::near_bf;
    if (zf) return Regime::near_zf;
    return Regime::interior;
}

namespace {

cplx log_term(double x, const ModelParams& p)
{
    return p.a == 0.0 ? cplx(0.0) : cplx(0.0, -0.5 * p.a * std::log(x));
}

void check_x(double x)
{
    if (!(x > 0.0)) throw DomainError("phase: x must be positive");
}

}  // namespace

cplx phase_direct(double x, double sigma, const ModelParams& p)
{
    check_x(x);
    double A = effective_charge(sigma, p);
    if (sigma == 0.0) throw DomainError("phase_direct: sigma = 0 needs the Taylor branch");
    double s2 = sigma * sigma;
    double v = std::sqrt(s2 + A * x) / x + (A / sigma) * arcsinh(sigma / std::sqrt(x * A));
    return v + log_term(x, p);
}

cplx phase_taylor(double x, double sigma, const ModelParams& p)
{
    check_x(x);
    double A = effective_charge(sigma, p);
    double eps = sigma * sigma / (A * x);
    // sqrt(1+e) + asinh(sqrt e)/sqrt e = sum c_k e^k
    double sum = 0.0, pw = 1.0;
    double binom_half = 1.0;  // binom(1/2, k)
    double central = 1.0;     // binom(2k, k) / 4^k
    for (int k = 0; k < phase_taylor_terms; ++k) {
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        sum += (binom_half + sgn * central / (2.0 * k + 1.0)) * pw;
        binom_half *= (0.5 - k) / (k + 1.0);
        central *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
        pw *= eps;
    }
    return std::sqrt(A / x) * sum + log_term(x, p);
}

cplx phase(double x, double sigma, const ModelParams& p)
{
    check_x(x);
    double A = effective_charge(sigma, p);
    if (sigma * sigma / (A * x) < phase_taylor_threshold) return phase_taylor(x, sigma, p);
    return phase_direct(x, sigma, p);
}

cplx phase_derivative(double x, double sigma, const ModelParams& p)
{
    check_x(x);
    double A = effective_charge(sigma, p);
    double v = -std::sqrt(sigma * sigma + A * x) / (x * x);
    return {v, p.a == 0.0 ? 0.0 : -0.5 * p.a / x};
}

namespace {

template <class T>
std::vector<T> differentiate_impl(const std::vector<double>& x, const std::vector<T>& u)
{
    const std::size_t n = x.size();
    if (n < 5 || u.size() != n) throw DomainError("differentiate: grid too coarse (need >= 5 points)");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1])) throw DomainError("differentiate: grid must be strictly increasing");
    std::vector<T> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i < 2 ? 0 : std::min(i - 2, n - 5);
        const double x0 = x[i];
        T acc{};
        for (std::size_t j = lo; j < lo + 5; ++j) {
            // derivative of the j-th Lagrange basis polynomial at x0
            double w = 0.0;
            for (std::size_t m = lo; m < lo + 5; ++m) {
                if (m == j) continue;
                double prod = 1.0 / (x[j] - x[m]);
                for (std::size_t l = lo; l < lo + 5; ++l) {
                    if (l == j || l == m) continue;
                    prod *= (x0 - x[l]) / (x[j] - x[l]);
                }
                w += prod;
            }
            acc += u[j] * w;
        }
        d[i] = acc;
    }
    return d;
}

}  // namespace

std::vector<double> differentiate(const std::vector<double>& x, const std::vector<double>& u)
{
    return differentiate_impl(x, u);
}

std::vector<cplx> differentiate(const std::vector<double>& x, const std::vector<cplx>& u)
{
    return differentiate_impl(x, u);
}

std::vector<cplx> normal_operator_apply(const std::vector<double>& x, const std::vector<cplx>& u,
                                        double sigma, const ModelParams& p)
{
    auto du = differentiate(x, u);
    const double s2 = sigma * sigma;
    std::vector<cplx> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double den = s2 + p.Z * x[i];
        cplx inner = x[i] * du[i] - 0.5 * (p.n - 1) * u[i] + 0.25 * p.Z * (x[i] / den) * u[i];
        out[i] = cplx(0.0, 2.0) * x[i] * std::sqrt(den) * inner;
    }
    return out;
}

std::vector<cplx> model_operator_apply(const std::vector<double>& xhat, const std::vector<cplx>& v,
                                       double l, double k)
{
    auto dv = differentiate(xhat, v);
    std::vector<cplx> out(xhat.size());
    for (std::size_t i = 0; i < xhat.size(); ++i) {
        double xh = xhat[i];
        out[i] = cplx(0.0, 2.0) * (xh * dv[i] + (xh / (1.0 + xh)) * (k + 0.25) * v[i] + (l + 0.5) * v[i]);
    }
    return out;
}

IndexSet::IndexSet() : kmin_([](int) { return absent; }) {}

IndexSet IndexSet::generated_by(const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<int> table;
    for (auto [k, kappa] : pairs) {
        if (k < 0 || kappa < 0) throw DomainError("index set: negative entries");
        if (std::size_t(kappa) >= table.size()) table.resize(kappa + 1, absent);
        table[kappa] = std::min(table[kappa], k);
    }
    return IndexSet([table](int kappa) { return std::size_t(kappa) < table.size() ? table[kappa] : absent; });
}

IndexSet IndexSet::log_index_set()
{
    return IndexSet([](int kappa) { return 2 * kappa; });
}

bool IndexSet::contains(int k, int kappa) const
{
    if (k < 0 || kappa < 0) return false;
    int m = kmin(kappa);
    return m != absent && k >= m;
}

std::vector<std::pair<int, int>> IndexSet::pairs(int k_max) const
{
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k <= k_max; ++k)
        for (int kappa = 0; kappa <= k_max; ++kappa)
            if (contains(k, kappa)) out.emplace_back(k, kappa);
    return out;
}

IndexSet indexset_plus(const IndexSet& f)
{
    return IndexSet([f](int kappa) {
        int own = f.kmin(kappa);
        int below = f.kmin(kappa - 1);
        if (below == IndexSet::absent) return own;
        int odd = (below % 2 == 1) ? below : below + 1;
        return std::min(own, odd + 1);
    });
}

}  // namespace coulres
