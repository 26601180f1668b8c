//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/specfun.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <vector>

#include "angle.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
//! Largest argument accepted by the cylinder-function routines.
inline constexpr double max_bessel_argument = 1.0e5;

//---------------------------------------------------------------------------//
/*!
 * Bessel functions of the first and second kind and their derivatives.
 */
struct CylFunValue
{
    double j{};   //!< J_alpha(u)
    double y{};   //!< Y_alpha(u)
    double jp{};  //!< dJ_alpha/du
    double yp{};  //!< dY_alpha/du
};

//---------------------------------------------------------------------------//
/*!
 * Cylinder functions with separate binary exponents for the J and Y pairs.
 *
 * J = j * 2^j_exp, J' = jp * 2^j_exp, and likewise for Y. At large order
 * and small argument J underflows and Y overflows in double precision while
 * their ratio (which is all the reflection coefficients need) stays finite.
 */
struct ScaledCylFun
{
    double j{};
    double jp{};
    int j_exp{};
    double y{};
    double yp{};
    int y_exp{};

    //! Convert to plain doubles; throws OverflowError if Y is not finite.
    CylFunValue unscaled() const;
};

//---------------------------------------------------------------------------//
// Bessel J and Y of real order alpha >= 0 at u in (0, max_bessel_argument]
CylFunValue bessel_jy(double alpha, double u);

// Same, with overflow-safe scaling
ScaledCylFun bessel_jy_scaled(double alpha, double u);

// J, Y and derivatives at orders base, base + 1, ..., base + count - 1
std::vector<ScaledCylFun>
bessel_jy_ladder(double base, double u, std::size_t count);

// Hankel function of the first kind, H1 = J + iY
cplx hankel1(double alpha, double u);

// Derivative dH1/du
cplx hankel1_derivative(double alpha, double u);

//---------------------------------------------------------------------------//
// Complementary error function of complex argument
cplx erfc_complex(cplx z);

//---------------------------------------------------------------------------//
}  // namespace abvortex
