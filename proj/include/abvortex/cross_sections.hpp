//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/cross_sections.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <string_view>

#include "partial_waves.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
enum class CrossSectionMethod
{
    parseval,
    quadrature,
    closed_short
};

std::string_view to_string(CrossSectionMethod m);

/*!
 * Total cross section per unit vortex length.
 */
struct CrossSectionReport
{
    double sigma{};  //!< [length]
    CrossSectionMethod method{CrossSectionMethod::parseval};
    long truncation_n{};  //!< Largest |n| summed (s_c for the closed form)
    double est_error{};
};

//---------------------------------------------------------------------------//
// |fc(phi)|^2
double dsigma_exact(PartialWaveSet const& pws, double phi);

// Short-wavelength differential cross section (k r_c > 10)
double dsigma_asymptotic(VortexConfig const& config, double phi);

// (4/k) sum |Y_n|^2
CrossSectionReport sigma_parseval(PartialWaveSet const& pws);

// Adaptive Gauss-Kronrod integral of |fc|^2 over (-pi, pi]
CrossSectionReport sigma_quadrature(PartialWaveSet const& pws);

// Closed short-wavelength form evaluated in complex arithmetic (k r_c > 10)
CrossSectionReport sigma_closed_short(VortexConfig const& config);

//---------------------------------------------------------------------------//
}  // namespace abvortex
