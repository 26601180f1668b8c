//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracles/oracles.cpp
//---------------------------------------------------------------------------//
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle
{
namespace
{
using Real = boost::multiprecision::cpp_bin_float_50;

Real real_pi()
{
    return boost::math::constants::pi<Real>();
}

struct Pair
{
    Real f;
    Real fp;
};

// J_alpha and its derivative from the ascending series; alpha may be
// negative but not a negative integer
Pair j_series(Real const& alpha, Real const& u)
{
    Real const h = u / 2;
    Real const q = -h * h;
    Real term = boost::multiprecision::pow(h, alpha)
                / boost::math::tgamma(alpha + 1);
    Real f = 0;
    Real fp = 0;
    for (int m = 0; m < 400; ++m)
    {
        f += term;
        fp += term * (2 * m + alpha) / u;
        if (m > 5 && abs(term) < abs(f) * Real("1e-45"))
            break;
        term *= q / ((m + 1) * (m + 1 + alpha));
    }
    return {f, fp};
}

// Integer-order Y_n from the logarithmic series
Real y_integer(int n, Real const& u)
{
    Real const pi = real_pi();
    Real const h = u / 2;
    Real const jn = j_series(Real(n), u).f;
    Real out = 2 / pi * jn * log(h);

    Real finite = 0;
    for (int k = 0; k < n; ++k)
    {
        finite += boost::math::tgamma(Real(n - k))
                  / boost::math::tgamma(Real(k + 1))
                  * boost::multiprecision::pow(h, 2 * k - n);
    }
    out -= finite / pi;

    Real const q = -h * h;
    Real term = boost::multiprecision::pow(h, n)
                / boost::math::tgamma(Real(n + 1));
    Real tail = 0;
    for (int k = 0; k < 400; ++k)
    {
        Real const c = boost::math::digamma(Real(k + 1))
                       + boost::math::digamma(Real(n + k + 1));
        tail += c * term;
        if (k > 5 && abs(term) < Real("1e-60"))
            break;
        term *= q / ((k + 1) * (n + k + 1));
    }
    return out - tail / pi;
}

}  // namespace

//---------------------------------------------------------------------------//
JY bessel_series(double alpha_in, double u_in)
{
    if (!(u_in > 0) || alpha_in < 0)
        throw std::domain_error("oracle requires u > 0 and alpha >= 0");
    Real const alpha = alpha_in;
    Real const u = u_in;
    Pair const jp = j_series(alpha, u);
    JY out;
    out.j = static_cast<double>(jp.f);
    out.jp = static_cast<double>(jp.fp);

    if (std::floor(alpha_in) == alpha_in)
    {
        int const n = static_cast<int>(alpha_in);
        Real const y = y_integer(n, u);
        // Y_n' = Y_{n-1} - (n/u) Y_n, Y_0' = -Y_1
        Real const yp = n == 0 ? -y_integer(1, u)
                               : y_integer(n - 1, u) - n / u * y;
        out.y = static_cast<double>(y);
        out.yp = static_cast<double>(yp);
    }
    else
    {
        Real const pi = real_pi();
        Pair const jm = j_series(-alpha, u);
        Real const c = cos(alpha * pi);
        Real const s = sin(alpha * pi);
        out.y = static_cast<double>((jp.f * c - jm.f) / s);
        out.yp = static_cast<double>((jp.fp * c - jm.fp) / s);
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Along t = z + s with s >= 0:
 * erfc(z) = 2/sqrt(pi) exp(-z^2) int_0^inf exp(-2 z s - s^2) ds,
 * which converges for Re z >= 0.
 */
cplx erfc_quadrature(cplx z)
{
    if (z.real() < 0)
        throw std::domain_error("oracle requires Re z >= 0");
    Real const zr = z.real();
    Real const zi = z.imag();
    boost::math::quadrature::exp_sinh<Real> integrator;
    auto part = [&](bool imag) {
        return integrator.integrate(
            [&](Real s) {
                // exp(-2 z s - s^2) = exp(-2 zr s - s^2) * exp(-2 i zi s)
                Real const mag = exp(-2 * zr * s - s * s);
                Real const ph = -2 * zi * s;
                return mag * (imag ? sin(ph) : cos(ph));
            },
            Real("1e-30"));
    };
    Real const ir = part(false);
    Real const ii = part(true);
    // exp(-z^2)
    Real const er = zr * zr - zi * zi;
    Real const ei = 2 * zr * zi;
    Real const mag = exp(-er);
    Real const cr = mag * cos(ei);
    Real const ci = -mag * sin(ei);
    Real const pref = 2 / sqrt(real_pi());
    Real const re = pref * (cr * ir - ci * ii);
    Real const im = pref * (cr * ii + ci * ir);
    return {static_cast<double>(re), static_cast<double>(im)};
}

//---------------------------------------------------------------------------//
// Extended precision keeps the phase n * phi exact enough for n ~ 1e3
cplx delta_sum(double x, double mu, double phi)
{
    long double re = 0;
    long double im = 0;
    long const lo = static_cast<long>(std::ceil(mu - x));
    long const hi = static_cast<long>(std::floor(mu + x));
    for (long n = lo; n <= hi; ++n)
    {
        long double const a = static_cast<long double>(n) * phi;
        re += std::cos(a);
        im += std::sin(a);
    }
    long double const tp = 2 * 3.14159265358979323846264338327950288L;
    return {static_cast<double>(re / tp), static_cast<double>(im / tp)};
}

cplx gamma_sum(double x, double mu, double phi)
{
    long double re = 0;
    long double im = 0;
    long const lo = static_cast<long>(std::ceil(mu - x));
    long const hi = static_cast<long>(std::floor(mu + x));
    for (long n = lo; n <= hi; ++n)
    {
        long double const sg = n > mu ? 1 : (n < mu ? -1 : 0);
        long double const a = static_cast<long double>(n) * phi;
        re += sg * std::cos(a);
        im += sg * std::sin(a);
    }
    long double const tp = 2 * 3.14159265358979323846264338327950288L;
    // Division by 2 pi i
    return {static_cast<double>(im / tp), static_cast<double>(-re / tp)};
}

//---------------------------------------------------------------------------//
cplx upsilon_series(double alpha, double u, double rho)
{
    JY const v = bessel_series(alpha, u);
    double const c = std::cos(rho * M_PI);
    double const s = std::sin(rho * M_PI);
    double const nj = c * v.j + s * u * v.jp;
    double const ny = c * v.y + s * u * v.yp;
    return nj / cplx{nj, ny};
}

}  // namespace oracle
