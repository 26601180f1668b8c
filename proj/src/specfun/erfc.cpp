//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file specfun/erfc.cpp
//---------------------------------------------------------------------------//
#include <cmath>

#include "abvortex/errors.hpp"
#include "abvortex/specfun.hpp"

namespace abvortex
{
namespace
{
constexpr double eps = 1e-16;
constexpr double tiny = 1e-300;
constexpr double series_radius = 2.0;

// erf by its Maclaurin series
cplx erf_series(cplx z)
{
    cplx const z2 = z * z;
    cplx term = z;
    cplx sum = z;
    for (int n = 1; n < 4000; ++n)
    {
        term *= -z2 / static_cast<double>(n);
        cplx const add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) <= eps * std::abs(sum))
            return 2.0 / std::sqrt(pi) * sum;
    }
    throw NumericalError("erfc: power series failed to converge");
}

// Laplace continued fraction, valid for Re z > 0 away from the imaginary axis:
// erfc z = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
cplx erfc_fraction(cplx z)
{
    cplx f = z;
    cplx c = f;
    cplx d = 0.0;
    for (int n = 1; n < 5000; ++n)
    {
        double const a = 0.5 * n;
        d = z + a * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = z + a / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        cplx const delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < eps)
            return std::exp(-z * z) / (std::sqrt(pi) * f);
    }
    throw NumericalError("erfc: continued fraction failed to converge");
}

}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Complementary error function of complex argument.
 *
 * Full accuracy is targeted on the sector |arg z| <= 3pi/8, which contains
 * the exp(-i pi/4) ray; other directions fall back to the power series.
 */
cplx erfc_complex(cplx z)
{
    if (z.real() < 0.0)
        return 2.0 - erfc_complex(-z);
    double const r = std::abs(z);
    if (r < series_radius || z.real() < 0.38 * r)
        return 1.0 - erf_series(z);
    return erfc_fraction(z);
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
