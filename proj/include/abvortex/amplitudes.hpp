//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/amplitudes.hpp
//---------------------------------------------------------------------------//
#pragma once

#include "angle.hpp"
#include "partial_waves.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
/*!
 * Scattering amplitude value [length^(1/2)] with its truncation error bound.
 */
struct ComplexAmplitude
{
    cplx value{};
    double phi{};        //!< Angle in (-pi, pi]
    double est_error{};  //!< Bound from the omitted partial waves
};

//---------------------------------------------------------------------------//
// Dirichlet tube amplitude (zero flux)
ComplexAmplitude
f_tube(double k, double r_c, double phi, double tail_tol = default_tail_tol);

// Singular-vortex amplitude; exactly zero for integer mu, throws at phi = 0
ComplexAmplitude f0(double k, double mu, double phi);

// f0 times the outgoing wave exp(i(kr + pi/4))/sqrt(r), valid at every angle
cplx f0_near_forward(double k, double r, double mu, double phi);

// Core amplitude from a channel set
ComplexAmplitude fc_exact(PartialWaveSet const& pws, double phi);

// Full amplitude f0 + fc (phi != 0 unless the flux is an integer)
ComplexAmplitude f_total(PartialWaveSet const& pws, double phi);

// Forward wave: cos(mu pi) exp(ikr) + fc(0) exp(i(kr + pi/4))/sqrt(r)
cplx forward_wave(PartialWaveSet const& pws, double r);

//---------------------------------------------------------------------------//
}  // namespace abvortex
