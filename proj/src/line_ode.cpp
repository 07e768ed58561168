#include "coulres/line_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "coulres/errors.hpp"
#include "coulres/quadrature.hpp"

namespace coulres {

double wavelength_cap(const LineCoeffs& c, double t)
{
    double k = std::sqrt(std::abs(c.q(t)));
    if (k == 0.0) return std::numeric_limits<double>::infinity();
    return 0.2 * M_PI / k;
}

std::vector<PointValue> march(const LineCoeffs& c, double t0, PointValue start,
                              const std::vector<double>& targets, OdeStats* stats,
                              const OdeOptions& opt_in)
{
    OdeOptions opt = opt_in;
    if (!opt.h_max) opt.h_max = [c](double t) { return wavelength_cap(c, t); };
    auto rhs = [c](double t, const std::array<double, 4>& y, std::array<double, 4>& dy) {
        cplx acc = -c.q(t) * cplx(y[0], y[1]);
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = acc.real();
        dy[3] = acc.imag();
    };
    std::array<double, 4> y0{start.u.real(), start.u.imag(), start.du.real(), start.du.imag()};
    auto ode = make_dop853<4>(rhs, t0, y0, opt);
    std::vector<PointValue> out;
    out.reserve(targets.size());
    for (double t : targets) {
        ode.advance(t);
        const auto& y = ode.y();
        out.push_back({cplx(y[0], y[1]), cplx(y[2], y[3])});
    }
    if (stats) {
        stats->accepted += ode.stats().accepted;
        stats->rejected += ode.stats().rejected;
        stats->evaluations += ode.stats().evaluations;
    }
    return out;
}

bool formal_series_value(const LineCoeffs& c, cplx s0, double t, double tol, PointValue& out,
                         int& terms, double& est_err, int max_terms)
{
    const cplx nu = -c.beta / (2.0 * s0);
    cplx a = 1.0, sum = 1.0, dsum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    terms = 1;
    est_err = 0.0;
    bool done = false;
    for (int m = 1; m <= max_terms; ++m) {
        a *= ((nu - double(m) + 1.0) * (nu - double(m)) + c.gamma) / (2.0 * s0 * double(m) * t);
        double mag = std::abs(a);
        if (mag < 0.1 * tol * std::abs(sum)) {
            sum += a;
            dsum += -double(m) * a / t;
            est_err = mag / std::abs(sum);
            terms = m + 1;
            done = true;
            break;
        }
        if (mag > prev) return false;
        prev = mag;
        sum += a;
        dsum += -double(m) * a / t;
        terms = m + 1;
    }
    if (!done) return false;
    cplx pre = std::exp(s0 * t + nu * std::log(t));
    out.u = pre * sum;
    out.du = out.u * (s0 + nu / t) + pre * dsum;
    return true;
}

namespace {

using Series = std::vector<cplx>;

Series deriv(const Series& a)
{
    Series d(a.size() > 1 ? a.size() - 1 : 1, 0.0);
    for (std::size_t j = 1; j < a.size(); ++j) d[j - 1] = double(j) * a[j];
    return d;
}

// a / b truncated to the length of a
Series divide(const Series& a, const Series& b)
{
    Series q(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        cplx s = a[j];
        for (std::size_t i = 1; i <= j && i < b.size(); ++i) s -= b[i] * q[j - i];
        q[j] = s / b[0];
    }
    return q;
}

}  // namespace

std::vector<cplx> riccati_terms(const LineCoeffs& c, cplx s0, double t, int max_order)
{
    const int D = std::max(max_order, 1);
    // Taylor coefficients of q(t + h)/alpha in h
    Series p(D + 1);
    double inv = 1.0 / t;
    double pw = inv;  // t^{-(j+1)}
    for (int j = 0; j <= D; ++j) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        cplx v = c.beta * sgn * pw + c.gamma * double(j + 1) * sgn * pw * inv;
        if (j == 0) v += c.alpha;
        p[j] = v / c.alpha;
        pw *= inv;
    }
    Series sq(D + 1);
    sq[0] = std::sqrt(p[0]);
    for (int j = 1; j <= D; ++j) {
        cplx s = p[j];
        for (int i = 1; i < j; ++i) s -= sq[i] * sq[j - i];
        sq[j] = s / (2.0 * sq[0]);
    }
    std::vector<Series> y;
    y.reserve(D + 1);
    Series y0(D + 1);
    for (int j = 0; j <= D; ++j) y0[j] = s0 * sq[j];
    y.push_back(y0);
    Series two_y0 = y0;
    for (auto& v : two_y0) v *= 2.0;

    std::vector<cplx> vals{y0[0]};
    const double scale = std::abs(y0[0]);
    for (int n = 1; n <= max_order; ++n) {
        const int len = D - n + 1;
        Series num = deriv(y[n - 1]);
        num.resize(len);
        for (int j = 1; j < n; ++j) {
            const Series& a = y[j];
            const Series& b = y[n - j];
            for (int k = 0; k < len; ++k) {
                cplx s = 0.0;
                for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
                num[k] += s;
            }
        }
        for (auto& v : num) v = -v;
        Series yn = divide(num, two_y0);
        vals.push_back(yn[0]);
        y.push_back(std::move(yn));
        if (std::abs(vals.back()) < 1e-20 * scale && n >= 2) break;
    }
    return vals;
}

AsymptoticSolution::AsymptoticSolution(LineCoeffs c, cplx s0, double tol, double t_floor,
                                       AnchorPolicy policy)
    : c_(c), s0_(s0), nu_(-c.beta / (2.0 * s0)), tol_(tol)
{
    const bool allow_series = policy != AnchorPolicy::liouville_green_only;
    const bool allow_lg = policy != AnchorPolicy::formal_series_only;
    for (double t = t_floor; t < 1e15; t *= 1.25) {
        Anchor a;
        if (allow_series && try_series(t, a)) {
            anchor_ = a;
            return;
        }
        if (allow_lg && try_lg(t, a)) {
            anchor_ = a;
            return;
        }
    }
    throw AccuracyError("no anchor satisfies the asymptotic error budget");
}

bool AsymptoticSolution::try_series(double t, Anchor& a) const
{
    PointValue v;
    int terms;
    double err;
    if (!formal_series_value(c_, s0_, t, tol_, v, terms, err)) return false;
    if (!std::isfinite(std::abs(v.u)) || !std::isfinite(std::abs(v.du))) return false;
    a = {t, AnchorKind::formal_series, terms, err};
    return true;
}

bool AsymptoticSolution::try_lg(double t, Anchor& a) const
{
    // no turning point at or beyond t
    cplx disc = std::sqrt(c_.beta * c_.beta - 4.0 * c_.alpha * c_.gamma);
    for (cplx root : {(-c_.beta + disc) / (2.0 * c_.alpha), (-c_.beta - disc) / (2.0 * c_.alpha)}) {
        if (root.real() > 0.5 * t && std::abs(root.imag()) < 0.5 * root.real()) return false;
    }
    // principal square root of q/alpha must stay off its cut on [t, inf)
    cplx prev = c_.q(t) / c_.alpha;
    if (prev.real() <= 0.0 && std::abs(prev.imag()) < 1e-12 * std::abs(prev)) return false;
    for (double s = t * 1.5; s < t * 1e8; s *= 1.5) {
        cplx cur = c_.q(s) / c_.alpha;
        if (std::abs(std::arg(cur) - std::arg(prev)) > 0.5 * M_PI) return false;
        prev = cur;
    }
    constexpr int max_order = 12;
    auto y = riccati_terms(c_, s0_, t, max_order);
    if (y.size() < 3) {
        // all corrections vanish
        a = {t, AnchorKind::liouville_green, int(y.size()), 0.0};
        return true;
    }
    std::size_t m = 2;
    for (std::size_t n = 2; n < y.size(); ++n) {
        if (!std::isfinite(std::abs(y[n]))) return false;
        if (std::abs(y[n]) < std::abs(y[m])) m = n;
    }
    double small = std::abs(y[m]);
    double rel = small / std::abs(y[0]);
    if (rel > 0.1 * tol_ || small * t > 0.1 * tol_) return false;
    a = {t, AnchorKind::liouville_green, int(m), std::max(rel, small * t)};
    return true;
}

cplx AsymptoticSolution::lg_integrand(double t) const
{
    auto y = riccati_terms(c_, s0_, t, anchor_.terms - 1);
    cplx w = (c_.beta / t + c_.gamma / (t * t)) / c_.alpha;
    cplx s = std::sqrt(1.0 + w);
    cplx f = s0_ * (-w * w / (2.0 * (s + 1.0) * (s + 1.0)) + c_.gamma / (2.0 * c_.alpha * t * t));
    for (std::size_t n = 1; n < y.size(); ++n) f += y[n];
    return f;
}

PointValue AsymptoticSolution::direct(double t) const
{
    return direct_many({t}).front();
}

std::vector<PointValue> AsymptoticSolution::direct_many(const std::vector<double>& t_desc) const
{
    std::vector<PointValue> out;
    out.reserve(t_desc.size());
    if (anchor_.kind == AnchorKind::formal_series) {
        for (double t : t_desc) {
            PointValue v;
            int terms;
            double err;
            if (!formal_series_value(c_, s0_, t, tol_, v, terms, err))
                throw AccuracyError("asymptotic series failed above its anchor");
            out.push_back(v);
        }
        return out;
    }
    // Liouville-Green: log u(t) = s0 t + nu log t - int_t^inf F
    cplx tail = 0.0;
    double upper = 0.0;
    const double qtol = 0.01 * tol_;
    for (std::size_t i = 0; i < t_desc.size(); ++i) {
        double t = t_desc[i];
        if (i == 0) {
            auto g = [this, t](double v) {
                if (v <= 0.0) return cplx(0.0);
                double s = t / (v * v);
                return lg_integrand(s) * (2.0 * t / (v * v * v));
            };
            tail = integrate_gk<cplx>(g, 0.0, 1.0, qtol).value;
        } else if (t < upper) {
            auto g = [this](double s) { return lg_integrand(s); };
            tail += integrate_gk<cplx>(g, t, upper, qtol).value;
        }
        upper = t;
        auto y = riccati_terms(c_, s0_, t, anchor_.terms - 1);
        cplx logder = std::accumulate(y.begin(), y.end(), cplx(0.0));
        cplx u = std::exp(s0_ * t + nu_ * std::log(t) - tail);
        out.push_back({u, u * logder});
    }
    return out;
}

std::vector<PointValue> AsymptoticSolution::eval(const std::vector<double>& t,
                                                 OdeStats* stats) const
{
    std::vector<std::size_t> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] > t[b]; });
    std::vector<double> above, below;
    for (std::size_t i : order) (t[i] >= anchor_.t ? above : below).push_back(t[i]);
    std::vector<PointValue> vals;
    std::vector<double> with_anchor = above;
    with_anchor.push_back(anchor_.t);
    auto top = direct_many(with_anchor);
    PointValue at_anchor = top.back();
    top.pop_back();
    vals = top;
    if (!below.empty()) {
        auto low = march(c_, anchor_.t, at_anchor, below, stats);
        vals.insert(vals.end(), low.begin(), low.end());
    }
    std::vector<PointValue> out(t.size());
    for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = vals[k];
    return out;
}

}  // namespace coulres
