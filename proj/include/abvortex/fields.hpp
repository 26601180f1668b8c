//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/fields.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "angle.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
struct FieldPoint
{
    double r{};    //!< Radius [length]
    double phi{};  //!< Angle in (-pi, pi]
};

struct FieldSample
{
    FieldPoint point;
    cplx psi{};
    long truncation_n{};  //!< Largest |n - mu| kept, rounded up
};

//! Plane wave evaluated directly and by its partial-wave sum.
struct PlaneWaveComparison
{
    cplx direct{};
    cplx partial_wave{};
};

//---------------------------------------------------------------------------//
/*!
 * Angular Fourier coefficients of the exact vortex wave function at one
 * radius.
 *
 * psi(r, phi) = sum_n c_n exp(i n phi) and dpsi/dr likewise with d_n, for
 * every channel with |n - mu| <= kr + 8 (kr)^(1/3) + 20. Building this once
 * per radius makes angular sweeps cheap.
 */
class RadialExpansion
{
  public:
    RadialExpansion(VortexConfig const& config, double r);

    cplx psi(double phi) const;
    cplx dpsi_dr(double phi) const;
    double r() const { return r_; }
    long truncation_n() const { return truncation_n_; }

  private:
    double r_;
    long truncation_n_;
    std::vector<long> n_;
    std::vector<cplx> c_;
    std::vector<cplx> d_;
};

//---------------------------------------------------------------------------//
// Order cutoff kr + 8 (kr)^(1/3) + 20 for a radial argument kr
double field_order_cutoff(double kr);

// Plane wave exp(ikr cos phi), directly and summed over partial waves
PlaneWaveComparison psi_plane(double k, FieldPoint point);

// Exact vortex wave function; throws DomainError for r < r_c
FieldSample psi_vortex(VortexConfig const& config, FieldPoint point);

// Max |cos(rho pi) psi + sin(rho pi) r_c dpsi/dr| over angles at r = r_c
double
boundary_residual(VortexConfig const& config, std::vector<double> const& phis);

// exp(ikr) psi(r, pi) for each radius
std::vector<cplx> incident_normalization(VortexConfig const& config,
                                         std::vector<double> const& radii);

//---------------------------------------------------------------------------//
}  // namespace abvortex
