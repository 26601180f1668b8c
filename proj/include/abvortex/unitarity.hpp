//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/unitarity.hpp
//! Unitarity and optical-theorem identities in the Fourier representation.
//!
//! Every angular integral is contracted exactly over Fourier coefficients:
//! with f(phi) = sum a_n exp(i n phi) and Gamma(phi) = sum g_n exp(i n phi),
//! g_n = sgn(n - mu) / (2 pi i), an integral of a product of two kernels at
//! shifted angles reduces to 2 pi times a single channel sum.
//---------------------------------------------------------------------------//
#pragma once

#include <string_view>

#include "angle.hpp"
#include "partial_waves.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
enum class UnitarityIdentity
{
    tube_ot,
    tube_offdiag,
    vortex_ot,
    vortex_offdiag,
    quasiclassical_ot,
    singular_vortex_weak,
};

std::string_view to_string(UnitarityIdentity id);

//! Whether an identity holds exactly (up to truncation) rather than
//! asymptotically.
bool is_exact(UnitarityIdentity id);

struct UnitarityReport
{
    UnitarityIdentity identity{UnitarityIdentity::vortex_ot};
    cplx lhs{};
    cplx rhs{};
    double abs_residual{};
    double rel_residual{};
    VortexConfig config;
    double phi1{};  //!< First angle (zero for diagonal identities)
    double phi2{};  //!< Second angle (zero for diagonal identities)
    //! Separate left-hand terms of the quasiclassical theorem
    double term_forward{};
    double term_flux{};
};

//---------------------------------------------------------------------------//
// Zero-flux optical theorem: 2 sqrt(2pi/k) Im f(0) = sigma
UnitarityReport tube_optical_theorem(PartialWaveSet const& pws);

// Zero-flux off-diagonal unitarity relation
UnitarityReport
tube_offdiagonal_unitarity(PartialWaveSet const& pws, double phi1, double phi2);

// Finite-vortex optical theorem including the Gamma cross terms
UnitarityReport vortex_optical_theorem(PartialWaveSet const& pws);

// Finite-vortex off-diagonal unitarity relation
UnitarityReport
vortex_offdiagonal(PartialWaveSet const& pws, double phi1, double phi2);

// Short-wavelength optical theorem (k r_c > 10)
UnitarityReport quasiclassical_optical_theorem(PartialWaveSet const& pws);

// Singular-vortex relation tested against the Fourier mode exp(i m phi)
UnitarityReport singular_vortex_weak(double k, double mu, long m);

// Per-channel elastic unitarity max |Re Y - |Y|^2| over a channel set
double channel_unitarity_defect(PartialWaveSet const& pws);

//---------------------------------------------------------------------------//
}  // namespace abvortex
