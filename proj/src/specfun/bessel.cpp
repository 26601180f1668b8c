//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file specfun/bessel.cpp
//! Real-order Bessel J and Y with derivatives.
//!
//! The order ladder base, base+1, ... is evaluated in one pass:
//!  - Lentz continued fraction (CF1) for J'/J at an order above both the
//!    top of the ladder and u;
//!  - backward recurrence of (J, J') down to a bottom order |b| <= 1/2;
//!  - for u < 2, Temme's series for Y_b, Y_{b+1} and the ascending series
//!    for J at the base order, which fixes the J normalization;
//!  - for u >= 2, Steed's complex continued fraction for
//!    (J' + iY')/(J + iY) with the Wronskian J Y' - J' Y = 2/(pi u);
//!  - forward recurrence of Y, which is stable in every regime.
//! Both recurrences are rescaled by exact powers of two, so orders far above
//! the argument produce finite mantissas with separate exponents.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "abvortex/errors.hpp"
#include "abvortex/specfun.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double eps = 1e-16;
constexpr double tiny = 1e-300;
constexpr double min_argument = 1e-280;
// Recurrences rescale once a value's exponent plus the step multiplier's
// exponent would pass this bound.
constexpr int rescale_exponent = 900;

// Taylor coefficients of 1/Gamma(z) about z = 0: 1/Gamma(z) = sum_k c_k z^k,
// listed from c_1.
constexpr std::array<double, 28> rgamma_taylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -0.0000012504934821426706573,
    0.0000011330272319816958824,
    -0.00000020563384169776071035,
    0.0000000061160951044814158179,
    0.0000000050020076444692229301,
    -0.0000000011812745704870201446,
    0.00000000010434267116911005105,
    0.000000000007782263439905071254,
    -0.0000000000036968056186422057082,
    0.0000000000005100370287454475979,
    -0.000000000000020583260535665067832,
    -0.0000000000000053481225394230179824,
    0.0000000000000012267786282382607902,
    -0.00000000000000011812593016974587695,
    0.0000000000000000011866922547516003326,
    0.0000000000000000014123806553180317816,
};

//---------------------------------------------------------------------------//
// Temme's gamma combinations for |mu| <= 1/2:
//   gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu),  gam2 = (1/G(1-mu) + 1/G(1+mu))/2
struct TemmeGamma
{
    double gam1;
    double gam2;
    double gampl;  // 1/Gamma(1 + mu)
    double gammi;  // 1/Gamma(1 - mu)
};

TemmeGamma temme_gamma(double mu)
{
    // 1/Gamma(1 + x) = sum_{j>=0} c_{j+1} x^j: even j feed gam2, odd j gam1
    double const m = mu * mu;
    double even = 0;
    double odd = 0;
    for (std::size_t i = rgamma_taylor.size() / 2; i-- > 0;)
    {
        even = even * m + rgamma_taylor[2 * i];
        odd = odd * m + rgamma_taylor[2 * i + 1];
    }
    TemmeGamma g;
    g.gam1 = -odd;
    g.gam2 = even;
    g.gampl = g.gam2 - mu * g.gam1;
    g.gammi = g.gam2 + mu * g.gam1;
    return g;
}

//---------------------------------------------------------------------------//
// Y_mu(x) and Y_{mu+1}(x) for |mu| <= 1/2, x < 2 (Temme's series).
void temme_series(double mu, double x, double& y_mu, double& y_mu1)
{
    double const x2 = 0.5 * x;
    double const pimu = pi * mu;
    double const fact = std::fabs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    double const fact2 = std::fabs(e) < eps ? 1.0 : std::sinh(e) / e;
    TemmeGamma const g = temme_gamma(mu);
    double ff = 2.0 / pi * fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    e = std::exp(e);
    double p = e / (g.gampl * pi);
    double q = 1.0 / (e * pi * g.gammi);
    double const pimu2 = 0.5 * pimu;
    double const fact3 = std::fabs(pimu2) < eps ? 1.0
                                                : std::sin(pimu2) / pimu2;
    double const r = pi * pimu2 * fact3 * fact3;
    double c = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    double const mu2 = mu * mu;
    int i = 1;
    for (; i <= 10000; ++i)
    {
        ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        double const del = c * (ff + r * q);
        sum += del;
        double const del1 = c * p - i * del;
        sum1 += del1;
        if (std::fabs(del) < (1.0 + std::fabs(sum)) * eps)
            break;
    }
    if (i > 10000)
        throw NumericalError("bessel: Temme series failed to converge");
    y_mu = -sum;
    y_mu1 = -sum1 * (2.0 / x);
}

//---------------------------------------------------------------------------//
// Steed's continued fraction: p + iq = (J' + iY') / (J + iY) at order mu.
void steed_cf2(double mu, double x, double& p, double& q)
{
    double const xi = 1.0 / x;
    double a = 0.25 - mu * mu;
    p = -0.5 * xi;
    q = 1.0;
    double const br = 2.0 * x;
    double bi = 2.0;
    double fact = a * xi / (p * p + q * q);
    double cr = br + q * fact;
    double ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int i = 2;
    for (; i <= 100000; ++i)
    {
        a += 2 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::fabs(dr) + std::fabs(di) < tiny)
            dr = tiny;
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::fabs(cr) + std::fabs(ci) < tiny)
            cr = tiny;
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::fabs(dlr - 1.0) + std::fabs(dli) < eps)
            break;
    }
    if (i > 100000)
        throw NumericalError("bessel: Steed continued fraction failed");
}

//---------------------------------------------------------------------------//
// J'_nu/J_nu by modified Lentz; sign receives sign(J_nu).
double cf1_ratio(double nu, double x, int& sign)
{
    double const xi = 1.0 / x;
    double const xi2 = 2.0 * xi;
    sign = 1;
    double h = std::max(nu * xi, tiny);
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int const max_iter = 20000 + 4 * static_cast<int>(x);
    for (int i = 1; i <= max_iter; ++i)
    {
        b += xi2;
        d = b - d;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b - 1.0 / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        double const del = c * d;
        h *= del;
        if (d < 0.0)
            sign = -sign;
        if (std::fabs(del - 1.0) < eps)
            return h;
    }
    throw NumericalError("bessel: CF1 failed to converge");
}

//---------------------------------------------------------------------------//
// Ascending series for J_nu, 0 <= nu < 1 and u < 2 (terms decrease at once)
double j_series(double nu, double x)
{
    double const h = 0.5 * x;
    double const q = -h * h;
    double term = std::pow(h, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int m = 1; m < 60; ++m)
    {
        term *= q / (m * (m + nu));
        sum += term;
        if (std::fabs(term) < eps * std::fabs(sum))
            return sum;
    }
    throw NumericalError("bessel: ascending series failed to converge");
}

//---------------------------------------------------------------------------//
int exponent_of(double v)
{
    return v == 0.0 ? std::numeric_limits<int>::min() / 2 : std::ilogb(v);
}

// Bring the larger of (a, b) into [0.5, 1) and move the shift into e
void renormalize(double& a, double& b, int& e)
{
    double const m = std::max(std::fabs(a), std::fabs(b));
    if (m == 0.0 || !std::isfinite(m))
        return;
    int k = 0;
    std::frexp(m, &k);
    a = std::ldexp(a, -k);
    b = std::ldexp(b, -k);
    e += k;
}

void check_argument(double u)
{
    if (!(u > 0.0) || !std::isfinite(u))
    {
        std::ostringstream os;
        os << "bessel: argument must be positive (got " << u << ")";
        throw DomainError(os.str());
    }
    if (u > max_bessel_argument)
    {
        std::ostringstream os;
        os << "bessel: argument " << u << " exceeds supported maximum "
           << max_bessel_argument;
        throw DomainError(os.str());
    }
    if (u < min_argument)
        throw OverflowError("bessel: argument too small for double range");
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
CylFunValue ScaledCylFun::unscaled() const
{
    CylFunValue v;
    v.j = std::ldexp(j, j_exp);
    v.jp = std::ldexp(jp, j_exp);
    v.y = std::ldexp(y, y_exp);
    v.yp = std::ldexp(yp, y_exp);
    if (!std::isfinite(v.y) || !std::isfinite(v.yp))
        throw OverflowError("bessel: Y is outside the double range");
    return v;
}

//---------------------------------------------------------------------------//
/*!
 * Cylinder functions at orders base + m, m = 0 .. count-1.
 *
 * Requires 0 <= base < 1. Cost is linear in (count + u).
 */
std::vector<ScaledCylFun>
bessel_jy_ladder(double base, double u, std::size_t count)
{
    if (!(base >= 0.0 && base < 1.0))
        throw DomainError("bessel: ladder base order must lie in [0, 1)");
    check_argument(u);
    if (count == 0)
        return {};

    // Bottom order b = base - shift lies in [-1/2, 1/2]
    std::size_t const shift = base > 0.5 ? 1 : 0;
    double const b = base - static_cast<double>(shift);
    std::size_t const n = count + shift;
    double const xi = 1.0 / u;
    double const w = 2.0 / (pi * u);

    // Backward recurrence for the (unnormalized) J chain. CF1 loses accuracy
    // when its order is below u, so the recurrence starts at or above u + 20
    // and runs through the oscillatory region, where it is neutrally stable
    std::vector<double> jv(n);
    std::vector<double> jpv(n);
    std::vector<int> je(n);
    auto const start = std::max(
        n - 1, static_cast<std::size_t>(std::ceil(u - b)) + 20);
    int sign = 1;
    double const f_top = cf1_ratio(b + static_cast<double>(start), u, sign);
    double rj = sign;
    double rjp = f_top * rj;
    int e = 0;
    if (start == n - 1)
    {
        jv[n - 1] = rj;
        jpv[n - 1] = rjp;
        je[n - 1] = 0;
    }
    for (std::size_t i = start; i >= 1; --i)
    {
        // Order factors are formed directly; accumulating them by repeated
        // subtraction costs O(n^2 eps) in the product
        double fact = (b + static_cast<double>(i)) * xi;
        if (exponent_of(rj) + exponent_of(fact) + 2 > rescale_exponent
            || exponent_of(rjp) > rescale_exponent)
        {
            int const k = std::max(exponent_of(rj), exponent_of(rjp));
            rj = std::ldexp(rj, -k);
            rjp = std::ldexp(rjp, -k);
            e += k;
        }
        double const rjtemp = fact * rj + rjp;
        fact = (b + static_cast<double>(i - 1)) * xi;
        rjp = fact * rjtemp - rj;
        rj = rjtemp;
        if (i - 1 < n)
        {
            jv[i - 1] = rj;
            jpv[i - 1] = rjp;
            je[i - 1] = e;
        }
    }

    // Bottom-order Y pair and J normalization
    double const rj_bottom = jv[0] == 0.0 ? eps : jv[0];
    double const f = jpv[0] / rj_bottom;
    double y_b = 0;
    double y_b1 = 0;
    double norm = 0;
    if (u < 2.0)
    {
        // For b < 0 and small u, Y_b is nearly proportional to J_b and the
        // Wronskian normalization cancels; the series at order `base` has no
        // zero below u = 2.4 and no cancellation
        temme_series(b, u, y_b, y_b1);
        norm = std::ldexp(j_series(base, u), je[0] - je[shift]) / jv[shift];
    }
    else
    {
        double p = 0;
        double q = 0;
        steed_cf2(b, u, p, q);
        double const gam = (p - f) / q;
        double const j_b = std::copysign(std::sqrt(w / ((p - f) * gam + q)), rj_bottom);
        y_b = gam * j_b;
        double const yp_b = p * y_b + q * j_b;
        y_b1 = b * xi * y_b - yp_b;
        norm = j_b / rj_bottom;
    }

    std::vector<ScaledCylFun> out(count);
    for (std::size_t i = shift; i < n; ++i)
    {
        ScaledCylFun& s = out[i - shift];
        s.j = jv[i] * norm;
        s.jp = jpv[i] * norm;
        s.j_exp = je[i] - je[0];
        renormalize(s.j, s.jp, s.j_exp);
    }

    // Forward recurrence for Y
    double ycur = y_b;
    double ynext = y_b1;
    int ey = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double const nu = b + static_cast<double>(i);
        double const yp = nu * xi * ycur - ynext;
        if (i >= shift)
        {
            ScaledCylFun& s = out[i - shift];
            s.y = ycur;
            s.yp = yp;
            s.y_exp = ey;
            renormalize(s.y, s.yp, s.y_exp);
        }
        if (i + 1 == n)
            break;
        double const step = 2.0 * (nu + 1.0) * xi;
        if (exponent_of(ynext) + exponent_of(step) + 2 > rescale_exponent)
        {
            int const k = exponent_of(ynext);
            ynext = std::ldexp(ynext, -k);
            ycur = std::ldexp(ycur, -k);
            ey += k;
        }
        double const ynew = step * ynext - ycur;
        ycur = ynext;
        ynext = ynew;
    }
    return out;
}

//---------------------------------------------------------------------------//
ScaledCylFun bessel_jy_scaled(double alpha, double u)
{
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("bessel: order must be nonnegative");
    double const whole = std::floor(alpha);
    auto ladder = bessel_jy_ladder(
        alpha - whole, u, static_cast<std::size_t>(whole) + 1);
    return ladder.back();
}

CylFunValue bessel_jy(double alpha, double u)
{
    return bessel_jy_scaled(alpha, u).unscaled();
}

cplx hankel1(double alpha, double u)
{
    auto const v = bessel_jy(alpha, u);
    return {v.j, v.y};
}

cplx hankel1_derivative(double alpha, double u)
{
    auto const v = bessel_jy(alpha, u);
    return {v.jp, v.yp};
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
