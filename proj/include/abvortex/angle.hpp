//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/angle.hpp
//! Small trigonometric helpers shared by every module.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace abvortex
{
using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

//---------------------------------------------------------------------------//
/*!
 * Map an angle into (-pi, pi].
 */
inline double normalize_angle(double phi)
{
    if (phi > -pi && phi <= pi)
        return phi;
    double r = std::remainder(phi, 2 * pi);
    if (r <= -pi)
        r += 2 * pi;
    return r;
}

//---------------------------------------------------------------------------//
/*!
 * cos(pi x) and sin(pi x) with exact results at integer and half-integer x.
 *
 * The argument is reduced modulo 2 before multiplying by pi, so large
 * integer-offset arguments keep full relative accuracy.
 */
inline double cos_pi(double x)
{
    double r = std::fmod(std::fabs(x), 2.0);
    if (r == 0.5 || r == 1.5)
        return 0.0;
    if (r == 0.0)
        return 1.0;
    if (r == 1.0)
        return -1.0;
    return std::cos(pi * r);
}

inline double sin_pi(double x)
{
    double r = std::fmod(x, 2.0);
    if (r == 0.0 || r == 1.0 || r == -1.0)
        return 0.0;
    if (r == 0.5 || r == -1.5)
        return 1.0;
    if (r == -0.5 || r == 1.5)
        return -1.0;
    return std::sin(pi * r);
}

//! exp(i pi x) with unit modulus up to rounding.
inline cplx cis_pi(double x)
{
    return {cos_pi(x), sin_pi(x)};
}

//! exp(i theta)
inline cplx cis(double theta)
{
    return {std::cos(theta), std::sin(theta)};
}

//! Sign with sgn(0) == 0.
inline constexpr double sgn(double x)
{
    return static_cast<double>((0.0 < x) - (x < 0.0));
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
