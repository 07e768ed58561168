// Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "coulres/errors.hpp"

namespace coulres {

namespace gk15 {
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace gk15

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    int intervals = 0;
};

namespace detail {
inline double mag(double v) { return std::abs(v); }
inline double mag(std::complex<double> v) { return std::abs(v); }

template <class T, class F>
void gk15_rule(F& f, double a, double b, T& result, double& err)
{
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * gk15::wgk[7];
    T gauss = fc * gk15::wg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = hw * gk15::xgk[j];
        T f1 = f(c - dx), f2 = f(c + dx);
        kron += (f1 + f2) * gk15::wgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * gk15::wg[j / 2];
    }
    result = kron * hw;
    err = mag((kron - gauss) * hw);
}
}  // namespace detail

// Integrates f over [a, b]; stops when the summed error estimate is below
// max(abs_tol, rel_tol * |I|). Throws AccuracyError if the interval budget runs out.
template <class T, class F>
QuadResult<T> integrate_gk(F f, double a, double b, double abs_tol, double rel_tol = 0.0,
                           int max_intervals = 2000)
{
    struct Piece {
        double a, b;
        T value;
        double err;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    QuadResult<T> out;
    if (a == b) return out;
    std::priority_queue<Piece> heap;
    Piece p{a, b, T{}, 0.0};
    detail::gk15_rule<T>(f, a, b, p.value, p.err);
    heap.push(p);
    T total = p.value;
    double total_err = p.err;
    int n = 1;
    while (total_err > std::max(abs_tol, rel_tol * detail::mag(total))) {
        if (n >= max_intervals) throw AccuracyError("quadrature: interval budget exhausted");
        Piece worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Piece l{worst.a, mid, T{}, 0.0}, r{mid, worst.b, T{}, 0.0};
        detail::gk15_rule<T>(f, l.a, l.b, l.value, l.err);
        detail::gk15_rule<T>(f, r.a, r.b, r.value, r.err);
        total += l.value + r.value - worst.value;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++n;
        if (n % 64 == 0 || total_err <= std::max(abs_tol, rel_tol * detail::mag(total))) {
            // resum to shed drift from repeated subtraction
            auto copy = heap;
            total = T{};
            total_err = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                total_err += copy.top().err;
                copy.pop();
            }
        }
    }
    out.value = total;
    out.error = total_err;
    out.intervals = n;
    return out;
}

}  // namespace coulres
