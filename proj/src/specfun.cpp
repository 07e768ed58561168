#include "coulres/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "coulres/errors.hpp"

namespace coulres {

namespace {
#include "lanczos_g607_n15.inc"

constexpr double eps = std::numeric_limits<double>::epsilon();
const cplx I(0.0, 1.0);

void note(EvalDiagnostics* d, Method m, int terms, double err)
{
    if (d) *d = {m, std::max(terms, 1), std::max(err, 0.0)};
}

bool is_nonpositive_integer(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cplx lanczos_log_gamma(cplx z)
{
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int k = 1; k < 15; ++k) x += lanczos_c[k] / (z + double(k));
    cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z) without overflow for large |Im z|
cplx log_sin_pi(cplx z)
{
    double y = z.imag();
    if (y > 1.0) return -I * M_PI * z + std::log(I / 2.0) + std::log(1.0 - std::exp(2.0 * I * M_PI * z));
    if (y < -1.0) return I * M_PI * z + std::log(-I / 2.0) + std::log(1.0 - std::exp(-2.0 * I * M_PI * z));
    return std::log(std::sin(M_PI * z));
}

}  // namespace

const char* method_name(Method m)
{
    switch (m) {
        case Method::power_series: return "power_series";
        case Method::asymptotic_series: return "asymptotic_series";
        case Method::ode_march: return "ode_march";
        case Method::recurrence: return "recurrence";
        case Method::reflection: return "reflection";
    }
    return "unknown";
}

cplx log_gamma(cplx z, EvalDiagnostics* diag)
{
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) {
        cplx v = lanczos_log_gamma(z);
        note(diag, Method::power_series, 15, 4.0 * eps * std::max(1.0, std::abs(v)));
        return v;
    }
    cplx v = std::log(M_PI) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    note(diag, Method::reflection, 15, 8.0 * eps * std::max(1.0, std::abs(v)));
    return v;
}

cplx gamma(cplx z, EvalDiagnostics* diag)
{
    return std::exp(log_gamma(z, diag));
}

cplx kummer_m(cplx a, cplx b, cplx z, EvalDiagnostics* diag)
{
    if (is_nonpositive_integer(b)) throw DomainError("kummer_m: b is a non-positive integer");
    if (std::abs(z) > kummer_series_max_abs_z) throw DomainError("kummer_m: |z| beyond series budget");
    cplx term = 1.0, sum = 1.0;
    double abssum = 1.0;
    int n = 0;
    for (; n < kummer_series_max_terms; ++n) {
        term *= (a + double(n)) / (b + double(n)) * z / double(n + 1);
        sum += term;
        abssum += std::abs(term);
        if (std::abs(term) <= 0.25 * eps * std::abs(sum)) break;
    }
    if (n == kummer_series_max_terms) throw AccuracyError("kummer_m: series did not converge");
    double mag = std::abs(sum);
    note(diag, Method::power_series, n + 2, mag > 0 ? 2.0 * eps * abssum / mag : 1.0);
    return sum;
}

namespace {

LineCoeffs whittaker_ray_coeffs(cplx kappa, cplx mu, double theta)
{
    cplx e = std::exp(I * theta);
    return {-e * e / 4.0, kappa * e, 0.25 - mu * mu};
}

void check_cut(cplx z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("whittaker: argument on the branch cut");
}

// Series value of M and dM/dz; returns the estimated relative error.
double whittaker_m_series(cplx kappa, cplx mu, cplx z, PointValue& out, int& terms)
{
    cplx a = mu + 0.5 - kappa, b = 1.0 + 2.0 * mu;
    EvalDiagnostics d1, d2;
    cplx m1 = kummer_m(a, b, z, &d1);
    cplx m2 = kummer_m(a + 1.0, b + 1.0, z, &d2);
    cplx pre = std::exp(-z / 2.0 + (mu + 0.5) * std::log(z));
    out.u = pre * m1;
    out.du = out.u * (-0.5 + (mu + 0.5) / z) + pre * (a / b) * m2;
    terms = d1.terms_used;
    double rel_du = std::abs(pre * (a / b) * m2) * d2.est_rel_error / std::max(std::abs(out.du), 1e-300);
    return std::max(d1.est_rel_error, rel_du);
}

constexpr double series_accept = 1e-12;

}  // namespace

std::vector<PointValue> whittaker_m_ray(cplx kappa, cplx mu, double theta, const std::vector<double>& t,
                                        EvalDiagnostics* diag)
{
    if (t.empty()) return {};
    if (std::abs(std::remainder(theta, 2.0 * M_PI)) >= M_PI) throw DomainError("whittaker: ray on the branch cut");
    cplx e = std::exp(I * theta);
    double tmin = *std::min_element(t.begin(), t.end());
    if (tmin <= 0.0) throw DomainError("whittaker: argument must be nonzero");
    double t0 = std::min(tmin, 1.0 / std::max({1.0, std::abs(kappa), std::abs(mu)}));
    PointValue start;
    int terms;
    double err0 = whittaker_m_series(kappa, mu, t0 * e, start, terms);
    start.du *= e;  // d/dt along the ray

    std::vector<std::size_t> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return t[i] < t[j]; });
    std::vector<double> ts;
    for (std::size_t i : order) ts.push_back(t[i]);
    std::vector<PointValue> vals;
    OdeStats st;
    if (ts.back() == t0) {
        vals.assign(ts.size(), start);
    } else {
        std::vector<double> ahead;
        for (double v : ts)
            if (v > t0) ahead.push_back(v);
        auto marched = march(whittaker_ray_coeffs(kappa, mu, theta), t0, start, ahead, &st);
        std::size_t k = 0;
        for (double v : ts) vals.push_back(v > t0 ? marched[k++] : start);
    }
    std::vector<PointValue> out(t.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        out[order[k]] = {vals[k].u, vals[k].du / e};
    }
    note(diag, Method::ode_march, int(st.accepted) + terms, err0 + 1e-12 * std::sqrt(double(st.accepted) + 1.0));
    return out;
}

cplx whittaker_m(cplx kappa, cplx mu, cplx z, EvalDiagnostics* diag)
{
    check_cut(z);
    if (std::abs(z) <= kummer_series_max_abs_z) {
        EvalDiagnostics d;
        cplx m = kummer_m(mu + 0.5 - kappa, 1.0 + 2.0 * mu, z, &d);
        if (d.est_rel_error <= series_accept) {
            note(diag, Method::power_series, d.terms_used, d.est_rel_error);
            return std::exp(-z / 2.0 + (mu + 0.5) * std::log(z)) * m;
        }
    }
    return whittaker_m_ray(kappa, mu, std::arg(z), {std::abs(z)}, diag).front().u;
}

std::vector<PointValue> whittaker_w_ray(cplx kappa, cplx mu, double theta, const std::vector<double>& t,
                                        EvalDiagnostics* diag)
{
    if (std::abs(std::remainder(theta, 2.0 * M_PI)) >= M_PI) throw DomainError("whittaker: ray on the branch cut");
    for (double v : t)
        if (v <= 0.0) throw DomainError("whittaker: argument must be nonzero");
    cplx e = std::exp(I * theta);
    AsymptoticSolution sol(whittaker_ray_coeffs(kappa, mu, theta), -e / 2.0, 1e-13, 20.0);
    OdeStats st;
    auto vals = sol.eval(t, &st);
    // e^{s0 t} t^kappa -> e^{-z/2} z^kappa
    cplx norm = std::exp(I * theta * kappa);
    for (auto& v : vals) {
        v.u *= norm;
        v.du *= norm / e;
    }
    bool marched = std::any_of(t.begin(), t.end(), [&](double v) { return v < sol.anchor().t; });
    note(diag, marched ? Method::ode_march : Method::asymptotic_series, sol.anchor().terms + int(st.accepted),
         sol.anchor().est_err + (marched ? 1e-12 * std::sqrt(double(st.accepted) + 1.0) : 0.0));
    return vals;
}

cplx whittaker_w(cplx kappa, cplx mu, cplx z, EvalDiagnostics* diag)
{
    check_cut(z);
    return whittaker_w_ray(kappa, mu, std::arg(z), {std::abs(z)}, diag).front().u;
}

namespace {

struct BesselPair {
    double j, y;
};

const long double euler_gamma = 0.577215664901532860606512090082402431L;

// J_n, Y_n for n in {0, 1} by the ascending series in long double
BesselPair bessel_series(int n, double xd, EvalDiagnostics* diag)
{
    const long double x = xd, h = x / 2, q = -h * h;
    long double term = (n == 0) ? 1.0L : h;  // (x/2)^{2k+n}/(k!(k+n)!) with sign
    long double j = term, absj = std::fabs(term);
    // harmonic-number sums for Y
    long double hk = 0.0L, hk1 = 1.0L;  // H_k and H_{k+1}
    long double ysum = (n == 0) ? 0.0L : (-2.0L * euler_gamma + 1.0L) * term;
    long double absy = std::fabs(ysum);
    int k = 1;
    for (; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * static_cast<long double>(k + n));
        j += term;
        absj += std::fabs(term);
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        long double ty = (n == 0) ? hk * term : (hk + hk1 - 2.0L * euler_gamma) * term;
        ysum += ty;
        absy += std::fabs(ty);
        if (std::fabs(term) < 1e-22L * std::fabs(j) && k > 2) break;
    }
    long double lg = std::log(h);
    long double y;
    const long double pi = 3.141592653589793238462643383279502884L;
    if (n == 0) {
        y = (2.0L / pi) * ((lg + euler_gamma) * j - ysum);
    } else {
        y = (2.0L / pi) * j * lg - 2.0L / (pi * x) - ysum / pi;
    }
    const double leps = std::numeric_limits<long double>::epsilon();
    double ej = double(leps * absj / std::fabs(j));
    double ey = double(leps * (absy + std::fabs(j * lg) + 1.0L / x) / std::fabs(y));
    note(diag, Method::power_series, k + 1, std::max(ej, ey) + eps);
    return {double(j), double(y)};
}

// Hankel asymptotic expansion: J = sqrt(2/(pi x)) (P cos chi - Q sin chi), etc.
BesselPair bessel_asymptotic(int n, double x, EvalDiagnostics* diag)
{
    const double mu = 4.0 * n * n;
    double p = 1.0, q = 0.0, a = 1.0, last = 1.0;
    int k = 1;
    for (; k < 200; ++k) {
        double next = a * (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
        if (std::fabs(next) > std::fabs(last)) break;
        a = next;
        last = next;
        // a holds a_k(n)/x^k; i^k splits into P (even k) and Q (odd k)
        switch (k % 4) {
            case 0: p += a; break;
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
        }
        if (std::fabs(a) < 0.1 * eps) break;
    }
    double c = std::cos(x), s = std::sin(x);
    double cchi, schi;
    if (n == 0) {
        cchi = (c + s) * M_SQRT1_2;
        schi = (s - c) * M_SQRT1_2;
    } else {
        cchi = (s - c) * M_SQRT1_2;
        schi = -(s + c) * M_SQRT1_2;
    }
    double amp = std::sqrt(2.0 / (M_PI * x));
    note(diag, Method::asymptotic_series, k, std::fabs(last) + 2.0 * eps);
    return {amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)};
}

BesselPair bessel(int n, double x, EvalDiagnostics* diag)
{
    if (x < bessel_crossover) return bessel_series(n, x, diag);
    return bessel_asymptotic(n, x, diag);
}

}  // namespace

double bessel_j0(double x, EvalDiagnostics* diag)
{
    return bessel(0, std::fabs(x), diag).j;
}

double bessel_j1(double x, EvalDiagnostics* diag)
{
    if (x == 0.0) {
        note(diag, Method::power_series, 1, 0.0);
        return 0.0;
    }
    double v = bessel(1, std::fabs(x), diag).j;
    return x < 0 ? -v : v;
}

double bessel_y0(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("bessel_y0: x must be positive");
    return bessel(0, x, diag).y;
}

double bessel_y1(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("bessel_y1: x must be positive");
    return bessel(1, x, diag).y;
}

cplx hankel1_1(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("hankel: x must be positive");
    auto b = bessel(1, x, diag);
    return {b.j, b.y};
}

cplx hankel2_1(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("hankel: x must be positive");
    auto b = bessel(1, x, diag);
    return {b.j, -b.y};
}

cplx hankel1_0(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("hankel: x must be positive");
    auto b = bessel(0, x, diag);
    return {b.j, b.y};
}

cplx hankel2_0(double x, EvalDiagnostics* diag)
{
    if (x <= 0.0) throw DomainError("hankel: x must be positive");
    auto b = bessel(0, x, diag);
    return {b.j, -b.y};
}

double arcsinh(double t)
{
    return std::asinh(t);
}

}  // namespace coulres
