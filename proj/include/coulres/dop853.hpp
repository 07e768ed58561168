// Dormand-Prince 8(5,3) embedded Runge-Kutta pair with adaptive steps.
// Coefficients and error estimator follow Hairer & Wanner's DOP853.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

#include "coulres/errors.hpp"

namespace coulres {

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    long max_steps = 20'000'000;
    // optional cap on |h| as a function of t; returns +inf when unused
    std::function<double(double)> h_max;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
    long evaluations = 0;
};

namespace dop853_coef {
constexpr double c2 = 0.526001519587677318785587544488e-01;
constexpr double c3 = 0.789002279381515978178381316732e-01;
constexpr double c4 = 0.118350341907227396726757197510e+00;
constexpr double c5 = 0.281649658092772603273242802490e+00;
constexpr double c6 = 0.333333333333333333333333333333e+00;
constexpr double c7 = 0.25e+00;
constexpr double c8 = 0.307692307692307692307692307692e+00;
constexpr double c9 = 0.651282051282051282051282051282e+00;
constexpr double c10 = 0.6e+00;
constexpr double c11 = 0.857142857142857142857142857142e+00;

constexpr double a21 = 5.26001519587677318785587544488e-2;
constexpr double a31 = 1.97250569845378994544595329183e-2;
constexpr double a32 = 5.91751709536136983633785987549e-2;
constexpr double a41 = 2.95875854768068491816892993775e-2;
constexpr double a43 = 8.87627564304205475450678981324e-2;
constexpr double a51 = 2.41365134159266685502369798665e-1;
constexpr double a53 = -8.84549479328286085344864962717e-1;
constexpr double a54 = 9.24834003261792003115737966543e-1;
constexpr double a61 = 3.7037037037037037037037037037e-2;
constexpr double a64 = 1.70828608729473871279604482173e-1;
constexpr double a65 = 1.25467687566822425016691814123e-1;
constexpr double a71 = 3.7109375e-2;
constexpr double a74 = 1.70252211019544039314978060272e-1;
constexpr double a75 = 6.02165389804559606850219397283e-2;
constexpr double a76 = -1.7578125e-2;
constexpr double a81 = 3.70920001185047927108779319836e-2;
constexpr double a84 = 1.70383925712239993810214054705e-1;
constexpr double a85 = 1.07262030446373284651809199168e-1;
constexpr double a86 = -1.53194377486244017527936158236e-2;
constexpr double a87 = 8.27378916381402288758473766002e-3;
constexpr double a91 = 6.24110958716075717114429577812e-1;
constexpr double a94 = -3.36089262944694129406857109825e0;
constexpr double a95 = -8.68219346841726006818189891453e-1;
constexpr double a96 = 2.75920996994467083049415600797e1;
constexpr double a97 = 2.01540675504778934086186788979e1;
constexpr double a98 = -4.34898841810699588477366255144e1;
constexpr double a101 = 4.77662536438264365890433908527e-1;
constexpr double a104 = -2.48811461997166764192642586468e0;
constexpr double a105 = -5.90290826836842996371446475743e-1;
constexpr double a106 = 2.12300514481811942347288949897e1;
constexpr double a107 = 1.52792336328824235832596922938e1;
constexpr double a108 = -3.32882109689848629194453265587e1;
constexpr double a109 = -2.03312017085086261358222928593e-2;
constexpr double a111 = -9.3714243008598732571704021658e-1;
constexpr double a114 = 5.18637242884406370830023853209e0;
constexpr double a115 = 1.09143734899672957818500254654e0;
constexpr double a116 = -8.14978701074692612513997267357e0;
constexpr double a117 = -1.85200656599969598641566180701e1;
constexpr double a118 = 2.27394870993505042818970056734e1;
constexpr double a119 = 2.49360555267965238987089396762e0;
constexpr double a1110 = -3.0467644718982195003823669022e0;
constexpr double a121 = 2.27331014751653820792359768449e0;
constexpr double a124 = -1.05344954667372501984066689879e1;
constexpr double a125 = -2.00087205822486249909675718444e0;
constexpr double a126 = -1.79589318631187989172765950534e1;
constexpr double a127 = 2.79488845294199600508499808837e1;
constexpr double a128 = -2.85899827713502369474065508674e0;
constexpr double a129 = -8.87285693353062954433549289258e0;
constexpr double a1210 = 1.23605671757943030647266201528e1;
constexpr double a1211 = 6.43392746015763530355970484046e-1;

constexpr double b1 = 5.42937341165687622380535766363e-2;
constexpr double b6 = 4.45031289275240888144113950566e0;
constexpr double b7 = 1.89151789931450038304281599044e0;
constexpr double b8 = -5.8012039600105847814672114227e0;
constexpr double b9 = 3.1116436695781989440891606237e-1;
constexpr double b10 = -1.52160949662516078556178806805e-1;
constexpr double b11 = 2.01365400804030348374776537501e-1;
constexpr double b12 = 4.47106157277725905176885569043e-2;

constexpr double bhh1 = 0.244094488188976377952755905512e+00;
constexpr double bhh2 = 0.733846688281611857341361741547e+00;
constexpr double bhh3 = 0.220588235294117647058823529412e-01;

constexpr double er1 = 0.1312004499419488073250102996e-01;
constexpr double er6 = -0.1225156446376204440720569753e+01;
constexpr double er7 = -0.4957589496572501915214079952e+00;
constexpr double er8 = 0.1664377182454986536961530415e+01;
constexpr double er9 = -0.3503288487499736816886487290e+00;
constexpr double er10 = 0.3341791187130174790297318841e+00;
constexpr double er11 = 0.8192320648511571246570742613e-01;
constexpr double er12 = -0.2235530786388629525884427845e-01;
}  // namespace dop853_coef

// F is callable as f(t, const State& y, State& dy).
template <std::size_t N, class F>
class Dop853 {
public:
    using State = std::array<double, N>;

    Dop853(F f, double t0, const State& y0, OdeOptions opt = {})
        : f_(std::move(f)), opt_(std::move(opt)), t_(t0), y_(y0)
    {
        eval(t_, y_, k1_);
    }

    double t() const { return t_; }
    const State& y() const { return y_; }
    const OdeStats& stats() const { return stats_; }

    // Replace the state at the current t (used to restart after a jump).
    void reset(double t, const State& y)
    {
        t_ = t;
        y_ = y;
        h_ = 0.0;
        eval(t_, y_, k1_);
    }

    void advance(double t_end)
    {
        if (t_end == t_) return;
        const double dir = t_end > t_ ? 1.0 : -1.0;
        if (h_ == 0.0 || h_ * dir < 0.0) h_ = dir * initial_step(t_end, dir);
        long steps = 0;
        double err_old = 1e-4;
        bool last_rejected = false;
        while ((t_end - t_) * dir > 0.0) {
            if (++steps > opt_.max_steps) throw StepFailure("dop853: step budget exhausted");
            double h = h_;
            double cap = hcap(t_);
            if (std::abs(h) > cap) h = dir * cap;
            bool hits_end = false;
            if ((t_ + h - t_end) * dir >= 0.0) {
                h = t_end - t_;
                hits_end = true;
            }
            if (std::abs(h) <= 10.0 * std::numeric_limits<double>::epsilon() * std::abs(t_))
                throw StepFailure("dop853: step size underflow");
            double err = attempt(h);
            if (err <= 1.0) {
                double fac = err == 0.0 ? 6.0 : 0.9 * std::pow(err, -0.125) * std::pow(err_old, 0.0);
                fac = std::clamp(fac, 0.333, 6.0);
                if (last_rejected) fac = std::min(fac, 1.0);
                err_old = std::max(err, 1e-4);
                t_ = hits_end ? t_end : t_ + h;
                y_ = ynew_;
                k1_ = k4_;  // f at the new point
                ++stats_.accepted;
                // keep the controller's proposal; truncated end steps should not shrink it
                double proposal = h * fac;
                if (!hits_end || std::abs(proposal) > std::abs(h_)) h_ = proposal;
                last_rejected = false;
            } else {
                double fac = std::max(0.333, 0.9 * std::pow(err, -0.125));
                h_ = h * fac;
                ++stats_.rejected;
                last_rejected = true;
            }
        }
    }

private:
    void eval(double t, const State& y, State& dy)
    {
        f_(t, y, dy);
        ++stats_.evaluations;
    }

    double hcap(double t) const
    {
        if (!opt_.h_max) return std::numeric_limits<double>::infinity();
        return opt_.h_max(t);
    }

    double initial_step(double t_end, double dir)
    {
        double d0 = 0, d1 = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sk = opt_.atol + opt_.rtol * std::abs(y_[i]);
            d0 += (y_[i] / sk) * (y_[i] / sk);
            d1 += (k1_[i] / sk) * (k1_[i] / sk);
        }
        d0 = std::sqrt(d0 / N);
        d1 = std::sqrt(d1 / N);
        double h0 = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 : 0.01 * d0 / d1;
        h0 = std::min({h0, std::abs(t_end - t_), hcap(t_)});
        State y1, f1;
        for (std::size_t i = 0; i < N; ++i) y1[i] = y_[i] + dir * h0 * k1_[i];
        eval(t_ + dir * h0, y1, f1);
        double d2 = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sk = opt_.atol + opt_.rtol * std::abs(y_[i]);
            double e = (f1[i] - k1_[i]) / sk;
            d2 += e * e;
        }
        d2 = std::sqrt(d2 / N) / h0;
        double dm = std::max(d1, d2);
        double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 1.0 / 8.0);
        return std::min({100.0 * h0, h1, hcap(t_)});
    }

    // One trial step of size h from (t_, y_); fills ynew_ and k4_ = f(t+h, ynew_).
    double attempt(double h)
    {
        using namespace dop853_coef;
        const State& y = y_;
        const State& k1 = k1_;
        State w;
        for (std::size_t i = 0; i < N; ++i) w[i] = y[i] + h * a21 * k1[i];
        eval(t_ + c2 * h, w, k2_);
        for (std::size_t i = 0; i < N; ++i) w[i] = y[i] + h * (a31 * k1[i] + a32 * k2_[i]);
        eval(t_ + c3 * h, w, k3_);
        for (std::size_t i = 0; i < N; ++i) w[i] = y[i] + h * (a41 * k1[i] + a43 * k3_[i]);
        eval(t_ + c4 * h, w, k4_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a51 * k1[i] + a53 * k3_[i] + a54 * k4_[i]);
        eval(t_ + c5 * h, w, k5_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a61 * k1[i] + a64 * k4_[i] + a65 * k5_[i]);
        eval(t_ + c6 * h, w, k6_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a71 * k1[i] + a74 * k4_[i] + a75 * k5_[i] + a76 * k6_[i]);
        eval(t_ + c7 * h, w, k7_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a81 * k1[i] + a84 * k4_[i] + a85 * k5_[i] + a86 * k6_[i] + a87 * k7_[i]);
        eval(t_ + c8 * h, w, k8_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a91 * k1[i] + a94 * k4_[i] + a95 * k5_[i] + a96 * k6_[i] + a97 * k7_[i] +
                               a98 * k8_[i]);
        eval(t_ + c9 * h, w, k9_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a101 * k1[i] + a104 * k4_[i] + a105 * k5_[i] + a106 * k6_[i] +
                               a107 * k7_[i] + a108 * k8_[i] + a109 * k9_[i]);
        eval(t_ + c10 * h, w, k10_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a111 * k1[i] + a114 * k4_[i] + a115 * k5_[i] + a116 * k6_[i] +
                               a117 * k7_[i] + a118 * k8_[i] + a119 * k9_[i] + a1110 * k10_[i]);
        eval(t_ + c11 * h, w, k2_);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y[i] + h * (a121 * k1[i] + a124 * k4_[i] + a125 * k5_[i] + a126 * k6_[i] +
                               a127 * k7_[i] + a128 * k8_[i] + a129 * k9_[i] + a1210 * k10_[i] +
                               a1211 * k2_[i]);
        eval(t_ + h, w, k3_);

        State incr;
        for (std::size_t i = 0; i < N; ++i) {
            incr[i] = b1 * k1[i] + b6 * k6_[i] + b7 * k7_[i] + b8 * k8_[i] + b9 * k9_[i] +
                      b10 * k10_[i] + b11 * k2_[i] + b12 * k3_[i];
            ynew_[i] = y[i] + h * incr[i];
        }

        double err = 0, err2 = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sk = opt_.atol + opt_.rtol * std::max(std::abs(y[i]), std::abs(ynew_[i]));
            double e2 = incr[i] - bhh1 * k1[i] - bhh2 * k9_[i] - bhh3 * k3_[i];
            double e1 = er1 * k1[i] + er6 * k6_[i] + er7 * k7_[i] + er8 * k8_[i] + er9 * k9_[i] +
                        er10 * k10_[i] + er11 * k2_[i] + er12 * k3_[i];
            err2 += (e2 / sk) * (e2 / sk);
            err += (e1 / sk) * (e1 / sk);
        }
        double deno = err + 0.01 * err2;
        if (deno <= 0.0) deno = 1.0;
        double e = std::abs(h) * err * std::sqrt(1.0 / (N * deno));
        if (!std::isfinite(e)) e = 1e10;
        if (e <= 1.0) eval(t_ + h, ynew_, k4_);
        return e;
    }

    F f_;
    OdeOptions opt_;
    double t_;
    State y_;
    double h_ = 0.0;
    OdeStats stats_;
    State k1_{}, k2_{}, k3_{}, k4_{}, k5_{}, k6_{}, k7_{}, k8_{}, k9_{}, k10_{}, ynew_{};
};

template <std::size_t N, class F>
Dop853<N, F> make_dop853(F f, double t0, const std::array<double, N>& y0, OdeOptions opt = {})
{
    return Dop853<N, F>(std::move(f), t0, y0, std::move(opt));
}

}  // namespace coulres
