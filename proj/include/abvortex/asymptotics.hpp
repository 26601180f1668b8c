//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/asymptotics.hpp
//! Long- and short-wavelength limit formulas for the amplitudes.
//---------------------------------------------------------------------------//
#pragma once

#include "angle.hpp"
#include "partial_waves.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
/*!
 * Pieces of the core-amplitude sum Sigma = 2 sum_n exp(in phi) lambda_n Y_n.
 *
 * sigma1 is the exact geometric sum over |n - mu| <= s, sigma2 the
 * stationary-phase value of the reflection part, and sigma3_bound the
 * leading magnitude of the evanescent tail |n - mu| > s.
 */
struct QuasiclassicalBreakdown
{
    cplx sigma1{};
    cplx sigma2{};
    double sigma3_bound{};
    double chi{};  //!< Reflection phase, reduced to (-pi/2, pi/2]
};

struct QuasiclassicalAmplitude
{
    cplx value{};
    double est_error{};  //!< sqrt(2 pi / k)^-1 * sigma3_bound
    QuasiclassicalBreakdown parts;
};

//! Measured and predicted magnitude of the evanescent tail at phi = 0.
struct TailCheck
{
    double measured{};
    double predicted{};
};

//---------------------------------------------------------------------------//
// Tube amplitude for k r_c < 0.01 (angle independent)
cplx f_tube_long(double k, double r_c);

// Tube amplitude for k r_c > 10: diffraction peak plus geometric reflection
cplx f_tube_short(double k, double r_c, double phi);

// Robin reflection phase chi(s, phi)
double reflection_phase(double s, double rho, double phi);

// Quasiclassical core amplitude; s > 10 and phi != 0
QuasiclassicalAmplitude
fc_quasiclassical(VortexConfig const& config, double phi);

// Leading forward core amplitude i sqrt(2k/pi) r_c cos(mu pi); s > 10
cplx fc_forward(VortexConfig const& config);

// Evanescent-tail magnitude versus 2 Gamma(2/3) (s/12)^(1/3); s > 10
TailCheck sigma3_tail_check(VortexConfig const& config,
                            double tail_tol = default_tail_tol);

//---------------------------------------------------------------------------//
}  // namespace abvortex
