//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file amplitudes.cpp
//---------------------------------------------------------------------------//
#include "abvortex/amplitudes.hpp"

#include <cmath>

#include "abvortex/angular_kernels.hpp"
#include "abvortex/errors.hpp"
#include "abvortex/specfun.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
ComplexAmplitude f_tube(double k, double r_c, double phi, double tail_tol)
{
    VortexConfig const config{k, r_c, 0.0, 0.0};
    return fc_exact(build_partial_waves(config, tail_tol), phi);
}

//---------------------------------------------------------------------------//
ComplexAmplitude f0(double k, double mu, double phi)
{
    if (!(k > 0.0))
        throw DomainError("wavenumber must be positive");
    ComplexAmplitude out;
    out.phi = normalize_angle(phi);
    if (mu == std::floor(mu))
        return out;
    if (out.phi == 0.0)
        throw DomainError(
            "f0 diverges at phi = 0; use f0_near_forward for the outgoing "
            "wave there");
    out.value = cplx{0, std::sqrt(2 * pi / k) * sin_pi(mu)}
                * gamma_nu(mu, out.phi);
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Outgoing singular-vortex wave at finite r, continuous through every angle
 * except for the jump at phi = 0 which cancels that of the incident wave.
 * At phi = 0 exactly the mean of the two one-sided limits (zero) is returned.
 */
cplx f0_near_forward(double k, double r, double mu, double phi)
{
    if (!(r > 0.0))
        throw DomainError("radius must be positive");
    if (!(k > 0.0))
        throw DomainError("wavenumber must be positive");
    phi = normalize_angle(phi);
    double const sm = sin_pi(mu);
    double const sh = std::sin(0.5 * phi);
    if (sm == 0.0 || sh == 0.0)
        return 0.0;
    double const nu = std::floor(mu);
    cplx const arg
        = std::polar(std::sqrt(2 * k * r) * std::fabs(sh), -0.25 * pi);
    return cplx{0, sm} * cis(k * r * std::cos(phi)) * cis((nu + 0.5) * phi)
           * sgn(sh) * erfc_complex(arg);
}

//---------------------------------------------------------------------------//
ComplexAmplitude fc_exact(PartialWaveSet const& pws, double phi)
{
    ComplexAmplitude out;
    out.phi = normalize_angle(phi);
    cplx sum = 0.0;
    for (auto const& ch : pws.channels)
        sum += cis(static_cast<double>(ch.n) * out.phi) * ch.lambda
               * ch.upsilon;
    double const pref = std::sqrt(2 / (pws.config.k * pi));
    out.value = cplx{0, pref} * sum;
    out.est_error = pref * pws.tail_bound;
    return out;
}

//---------------------------------------------------------------------------//
ComplexAmplitude f_total(PartialWaveSet const& pws, double phi)
{
    auto out = fc_exact(pws, phi);
    out.value += f0(pws.config.k, pws.config.mu, out.phi).value;
    return out;
}

//---------------------------------------------------------------------------//
cplx forward_wave(PartialWaveSet const& pws, double r)
{
    auto const& c = pws.config;
    if (!(r >= c.r_c))
        throw DomainError("forward wave requires r >= r_c");
    cplx const fc0 = fc_exact(pws, 0.0).value;
    return cos_pi(c.mu) * cis(c.k * r)
           + fc0 * cis(c.k * r + 0.25 * pi) / std::sqrt(r);
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
