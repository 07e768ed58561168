#include "coulres/connection.hpp"

#include <algorithm>
#include <cmath>

#include "coulres/errors.hpp"
#include "coulres/radial.hpp"
#include "coulres/specfun.hpp"

namespace coulres {

namespace {

const cplx I(0.0, 1.0);
const double pi = 3.14159265358979323846;

void check_args(double sigma, double Z, int sign)
{
    if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
    if (!(Z > 0.0)) throw DomainError("Z must be positive");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
}

// principal log of -+2 i sigma
cplx log_base(double sigma, int sign)
{
    return {std::log(2.0 * sigma), -sign * 0.5 * pi};
}

cplx wr(const PointValue& a, const PointValue& b)
{
    return a.u * b.du - a.du * b.u;
}

}  // namespace

cplx log_c_pm(double sigma, double Z, int sign)
{
    check_args(sigma, Z, sign);
    double h = Z / (2.0 * sigma);
    return cplx(std::log(std::sqrt(Z) / (2.0 * pi * sigma)), pi) + double(sign) * I * h * log_base(sigma, sign) +
           log_gamma(cplx(0.0, -sign * h));
}

cplx c_pm(double sigma, double Z, int sign)
{
    return std::exp(log_c_pm(sigma, Z, sign));
}

cplx log_c_pm0(double sigma, double Z, int sign)
{
    check_args(sigma, Z, sign);
    double ph = sign * (0.25 * pi + (Z / sigma) * (std::log(2.0 * sigma / std::sqrt(Z)) + 0.5));
    return {-0.5 * std::log(pi * sigma), ph};
}

cplx c_pm0(double sigma, double Z, int sign)
{
    return std::exp(log_c_pm0(sigma, Z, sign));
}

ConnectionEval connection_eval(double sigma, double Z)
{
    ConnectionEval e;
    e.sigma = sigma;
    e.C_plus = c_pm(sigma, Z, +1);
    e.C_minus = c_pm(sigma, Z, -1);
    e.C_plus0 = c_pm0(sigma, Z, +1);
    e.C_minus0 = c_pm0(sigma, Z, -1);
    return e;
}

cplx log_small_r_limit_w(double sigma, double Z, int sign)
{
    check_args(sigma, Z, sign);
    double h = Z / (2.0 * sigma);
    return cplx(std::log(2.0 * sigma / Z), sign * 0.5 * pi) - double(sign) * I * h * log_base(sigma, sign) -
           log_gamma(cplx(0.0, -sign * h));
}

cplx small_r_limit_w(double sigma, double Z, int sign)
{
    return std::exp(log_small_r_limit_w(sigma, Z, sign));
}

cplx small_r_limit_w_numeric(double sigma, double Z, int sign, double r_c)
{
    check_args(sigma, Z, sign);
    if (r_c <= 0.0) r_c = 1e-3 * std::min(1.0, 1.0 / Z);
    ModelParams p;
    p.Z = Z;
    auto op = outgoing_pair(sigma, p, {r_c});
    const PointValue& w = sign > 0 ? op.w_plus[0] : op.w_minus[0];
    FrobeniusData fr = frobenius(sigma, Z, 0.0, r_c);
    PointValue reg{fr.reg.u, fr.reg.du}, second{fr.second.u, fr.second.du};
    return wr(reg, w) / wr(reg, second);
}

cplx connected_small_r_limit(double sigma, double Z, int sign)
{
    return std::exp(log_c_pm(sigma, Z, sign) + std::log(small_r_limit_w_numeric(sigma, Z, sign)));
}

std::vector<PointValue> v_pm(const std::vector<double>& r, double sigma, double Z, int sign)
{
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    ModelParams p;
    p.Z = Z;
    std::vector<PointValue> out;
    out.reserve(r.size());
    if (sigma == 0.0) {
        for (const auto& v : outgoing_solution(0.0, p, r))
            out.push_back(sign > 0 ? v : PointValue{std::conj(v.u), std::conj(v.du)});
        return out;
    }
    check_args(sigma, Z, sign);
    auto op = outgoing_pair(sigma, p, r);
    const auto& w = sign > 0 ? op.w_plus : op.w_minus;
    cplx lc = log_c_pm(sigma, Z, sign);
    for (const auto& v : w) {
        // w itself may be large where C is small; add the logs
        cplx val = v.u == 0.0 ? cplx(0.0) : std::exp(lc + std::log(v.u));
        cplx der = v.du == 0.0 ? cplx(0.0) : std::exp(lc + std::log(v.du));
        out.push_back({val, der});
    }
    return out;
}

cplx v_pm(double r, double sigma, double Z, int sign)
{
    return v_pm(std::vector<double>{r}, sigma, Z, sign)[0].u;
}

std::vector<cplx> U_ratio(double r, const std::vector<double>& E, double Z)
{
    cplx v0 = v_pm(r, 0.0, Z, -1);
    std::vector<cplx> out;
    out.reserve(E.size());
    for (double e : E) {
        if (e < 0.0) throw DomainError("U_ratio: E must be non-negative");
        out.push_back(e == 0.0 ? cplx(1.0) : v_pm(r, std::sqrt(e), Z, -1) / v0);
    }
    return out;
}

double transitional_phase(double varsigma, double Z, double r_half)
{
    if (!(varsigma > 0.0) || !(r_half > 0.0)) throw DomainError("varsigma and r^{1/2} must be positive");
    double inner = 0.5 * std::log(Z * r_half / (2.0 * varsigma)) +
                   std::log(varsigma / std::sqrt(Z) + std::sqrt(1.0 + varsigma * varsigma / Z));
    return -std::sqrt(varsigma * varsigma + Z) + Z / (2.0 * varsigma) - (Z / varsigma) * inner;
}

cplx transitional_raw(double varsigma, double Z, double r_half)
{
    if (!(varsigma > 0.0) || !(r_half > 0.0)) throw DomainError("varsigma and r^{1/2} must be positive");
    if (!(Z > 0.0)) throw DomainError("Z must be positive");
    // e^{-pi Z/4 sigma} (2 i sigma)^{-i Z/2 sigma} = e^{-i (Z/2 sigma) log 2 sigma}
    double sigma = varsigma / r_half, r = r_half * r_half;
    ModelParams p;
    p.Z = Z;
    auto op = outgoing_pair(sigma, p, {r});
    double ph = -(Z / (2.0 * sigma)) * std::log(2.0 * sigma);
    return std::polar(1.0, ph) * op.w_minus[0].u;
}

cplx transitional_profile(double varsigma, double Z, double r_half)
{
    double phi = transitional_phase(varsigma, Z, r_half);
    return std::polar(1.0 / std::sqrt(varsigma), -r_half * phi) * transitional_raw(varsigma, Z, r_half);
}

}  // namespace coulres
