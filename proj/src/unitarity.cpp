//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unitarity.cpp
//---------------------------------------------------------------------------//
#include "abvortex/unitarity.hpp"

#include <algorithm>
#include <cmath>

#include "abvortex/amplitudes.hpp"
#include "abvortex/angular_kernels.hpp"
#include "abvortex/cross_sections.hpp"
#include "abvortex/errors.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double residual_floor = 1e-300;

UnitarityReport finish(UnitarityIdentity id,
                       VortexConfig const& config,
                       cplx lhs,
                       cplx rhs,
                       double phi1 = 0,
                       double phi2 = 0)
{
    UnitarityReport r;
    r.identity = id;
    r.config = config;
    r.lhs = lhs;
    r.rhs = rhs;
    r.phi1 = phi1;
    r.phi2 = phi2;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual
                     / std::max({std::abs(lhs), std::abs(rhs), residual_floor});
    return r;
}

void require_zero_flux(PartialWaveSet const& pws)
{
    if (pws.config.mu != 0.0)
        throw PreconditionError("tube identities require zero flux");
}

// Fourier coefficient of fc: a_n = i sqrt(2/(k pi)) lambda_n Y_n
cplx fc_coefficient(PartialWaveSet const& pws, PartialWaveChannel const& ch)
{
    return cplx{0, std::sqrt(2 / (pws.config.k * pi))} * ch.lambda
           * ch.upsilon;
}

// Fourier coefficient of Gamma: sgn(n - mu) / (2 pi i)
cplx gamma_coefficient(long n, double mu)
{
    return sgn(static_cast<double>(n) - mu) / cplx{0, 2 * pi};
}

// (k/2pi) int fc*(phi - phi1) fc(phi - phi2) dphi
cplx overlap(PartialWaveSet const& pws, double delta)
{
    cplx sum = 0.0;
    for (auto const& ch : pws.channels)
        sum += std::norm(fc_coefficient(pws, ch))
               * cis(static_cast<double>(ch.n) * delta);
    return pws.config.k * sum;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(UnitarityIdentity id)
{
    switch (id)
    {
        case UnitarityIdentity::tube_ot:
            return "tube_ot";
        case UnitarityIdentity::tube_offdiag:
            return "tube_offdiag";
        case UnitarityIdentity::vortex_ot:
            return "vortex_ot";
        case UnitarityIdentity::vortex_offdiag:
            return "vortex_offdiag";
        case UnitarityIdentity::quasiclassical_ot:
            return "quasiclassical_ot";
        case UnitarityIdentity::singular_vortex_weak:
            return "singular_vortex_weak";
    }
    return {};
}

bool is_exact(UnitarityIdentity id)
{
    return id != UnitarityIdentity::quasiclassical_ot;
}

//---------------------------------------------------------------------------//
UnitarityReport tube_optical_theorem(PartialWaveSet const& pws)
{
    require_zero_flux(pws);
    double const k = pws.config.k;
    double const lhs = 2 * std::sqrt(2 * pi / k)
                       * fc_exact(pws, 0.0).value.imag();
    double const rhs = sigma_parseval(pws).sigma;
    return finish(UnitarityIdentity::tube_ot, pws.config, lhs, rhs);
}

//---------------------------------------------------------------------------//
UnitarityReport
tube_offdiagonal_unitarity(PartialWaveSet const& pws, double phi1, double phi2)
{
    require_zero_flux(pws);
    double const k = pws.config.k;
    double const delta = phi1 - phi2;
    cplx const lhs = std::sqrt(k / (2 * pi)) / cplx{0, 1}
                     * (fc_exact(pws, delta).value
                        - std::conj(fc_exact(pws, -delta).value));
    return finish(UnitarityIdentity::tube_offdiag,
                  pws.config,
                  lhs,
                  overlap(pws, delta),
                  phi1,
                  phi2);
}

//---------------------------------------------------------------------------//
UnitarityReport vortex_optical_theorem(PartialWaveSet const& pws)
{
    auto r = vortex_offdiagonal(pws, 0.0, 0.0);
    // Rescale (k/2pi) sigma to sigma
    double const scale = 2 * pi / pws.config.k;
    return finish(UnitarityIdentity::vortex_ot,
                  pws.config,
                  scale * r.lhs,
                  scale * r.rhs);
}

//---------------------------------------------------------------------------//
/*!
 * The Gamma integrals contract to
 *   int Gamma(phi1 - phi) fc(phi - phi2) + fc*(phi - phi1) Gamma(phi - phi2)
 *     = 2 pi sum_n g_n (a_n + a_n*) exp(i n (phi1 - phi2)).
 */
UnitarityReport
vortex_offdiagonal(PartialWaveSet const& pws, double phi1, double phi2)
{
    auto const& c = pws.config;
    double const delta = phi1 - phi2;
    cplx lhs = cos_pi(c.mu)
               * (fc_exact(pws, delta).value
                  - std::conj(fc_exact(pws, -delta).value));
    double const sm = sin_pi(c.mu);
    if (sm != 0.0)
    {
        cplx gamma_terms = 0.0;
        for (auto const& ch : pws.channels)
        {
            cplx const a = fc_coefficient(pws, ch);
            gamma_terms += gamma_coefficient(ch.n, c.mu) * (a + std::conj(a))
                           * cis(static_cast<double>(ch.n) * delta);
        }
        lhs += sm * 2 * pi * gamma_terms;
    }
    lhs *= std::sqrt(c.k / (2 * pi)) / cplx{0, 1};
    return finish(UnitarityIdentity::vortex_offdiag,
                  c,
                  lhs,
                  overlap(pws, delta),
                  phi1,
                  phi2);
}

//---------------------------------------------------------------------------//
UnitarityReport quasiclassical_optical_theorem(PartialWaveSet const& pws)
{
    auto const& c = pws.config;
    if (!(c.s() > 10.0))
        throw PreconditionError(
            "quasiclassical optical theorem requires k r_c > 10");
    double const k = c.k;
    double const forward = 2 * std::sqrt(2 * pi / k) * cos_pi(c.mu)
                           * fc_exact(pws, 0.0).value.imag();
    double const sm = sin_pi(c.mu);
    double const flux = 4 * pi / k * sm * sm
                        * delta_nu_x(c.s(), c.mu, 0.0).real();
    auto r = finish(UnitarityIdentity::quasiclassical_ot,
                    c,
                    forward + flux,
                    sigma_parseval(pws).sigma);
    r.term_forward = forward;
    r.term_flux = flux;
    return r;
}

//---------------------------------------------------------------------------//
/*!
 * Both sides integrated against exp(i m (phi1 - phi2)): the angular delta
 * contributes sin^2(mu pi)/(2 pi) and the amplitude overlap k |b_m|^2 with
 * b_m the Fourier coefficient of f0.
 */
UnitarityReport singular_vortex_weak(double k, double mu, long m)
{
    if (!(k > 0.0))
        throw DomainError("wavenumber must be positive");
    double const sm = sin_pi(mu);
    cplx const b = cplx{0, std::sqrt(2 * pi / k) * sm}
                   * gamma_coefficient(m, mu);
    VortexConfig config{k, 1.0, mu, 0.0};
    return finish(UnitarityIdentity::singular_vortex_weak,
                  config,
                  sm * sm / (2 * pi),
                  k * std::norm(b));
}

//---------------------------------------------------------------------------//
double channel_unitarity_defect(PartialWaveSet const& pws)
{
    double worst = 0.0;
    for (auto const& ch : pws.channels)
        worst = std::max(worst,
                         std::fabs(ch.upsilon.real() - std::norm(ch.upsilon)));
    return worst;
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
