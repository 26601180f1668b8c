//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file asymptotics.cpp
//---------------------------------------------------------------------------//
#include "abvortex/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "abvortex/angular_kernels.hpp"
#include "abvortex/errors.hpp"

namespace abvortex
{
namespace
{
constexpr double long_wavelength_max = 0.01;
constexpr double short_wavelength_min = 10.0;

void require_short(double s, char const* what)
{
    if (!(s > short_wavelength_min))
    {
        std::ostringstream os;
        os << what << " requires k r_c > " << short_wavelength_min
           << " (got " << s << ")";
        throw PreconditionError(os.str());
    }
}
}  // namespace

//---------------------------------------------------------------------------//
cplx f_tube_long(double k, double r_c)
{
    validate(VortexConfig{k, r_c, 0, 0});
    double const s = k * r_c;
    if (!(s < long_wavelength_max))
    {
        std::ostringstream os;
        os << "long-wavelength tube amplitude requires k r_c < "
           << long_wavelength_max << " (got " << s << ")";
        throw PreconditionError(os.str());
    }
    double const inv_log = 1.0 / std::fabs(std::log(s));
    return -std::sqrt(pi / (2 * k)) * inv_log
           * cplx{1.0 + euler_gamma * inv_log, -0.5 * pi * inv_log};
}

//---------------------------------------------------------------------------//
cplx f_tube_short(double k, double r_c, double phi)
{
    validate(VortexConfig{k, r_c, 0, 0});
    double const s = k * r_c;
    require_short(s, "short-wavelength tube amplitude");
    phi = normalize_angle(phi);
    double const sh = std::fabs(std::sin(0.5 * phi));
    cplx const peak = cplx{0, std::sqrt(2 * pi / k)} * delta_x(s, phi);
    cplx const reflect = std::sqrt(0.5 * r_c * sh)
                         * cis(-2 * s * sh - 0.25 * pi);
    return peak - reflect;
}

//---------------------------------------------------------------------------//
/*!
 * arctan[2 s |sin^3(phi/2)| / (2 cot(rho pi) sin^2(phi/2) - 1)].
 *
 * Numerator and denominator are multiplied by sin(rho pi) >= 0 so that the
 * Dirichlet limit needs no special case. Only exp(-2i chi) enters the
 * amplitude, which is pi-periodic in chi, so the result is simply reduced to
 * (-pi/2, pi/2].
 */
double reflection_phase(double s, double rho, double phi)
{
    double const sh = std::fabs(std::sin(0.5 * phi));
    double const sr = sin_pi(rho);
    double const num = 2 * s * sh * sh * sh * sr;
    double const den = 2 * cos_pi(rho) * sh * sh - sr;
    double chi = std::atan2(num, den);
    if (chi > 0.5 * pi)
        chi -= pi;
    else if (chi <= -0.5 * pi)
        chi += pi;
    return chi;
}

//---------------------------------------------------------------------------//
QuasiclassicalAmplitude
fc_quasiclassical(VortexConfig const& config, double phi)
{
    validate(config);
    double const s = config.s();
    require_short(s, "quasiclassical amplitude");
    phi = normalize_angle(phi);
    if (phi == 0.0)
        throw DomainError(
            "quasiclassical amplitude is not defined at phi = 0; use "
            "fc_forward");

    double const k = config.k;
    double const mu = config.mu;
    double const sm = sin_pi(mu);
    double const sh = std::fabs(std::sin(0.5 * phi));

    QuasiclassicalAmplitude out;
    auto& parts = out.parts;
    parts.sigma1 = 2 * pi * cos_pi(mu) * delta_nu_x(s, mu, phi);
    if (sm != 0.0)
        parts.sigma1 -= 2 * pi * sm * gamma_nu_x(s, mu, phi);

    parts.chi = reflection_phase(s, config.rho, phi);
    parts.sigma2 = std::sqrt(s * pi * sh) * cis(0.25 * pi)
                   * cis(-2 * parts.chi)
                   * cis(-2 * s * sh + mu * (phi - sgn(phi) * pi));
    parts.sigma3_bound = 2 * std::tgamma(2.0 / 3.0) * std::cbrt(s / 12);

    double const pref = 1.0 / std::sqrt(2 * pi * k);
    out.value = cplx{0, pref} * (parts.sigma1 + parts.sigma2);
    out.est_error = pref * parts.sigma3_bound;
    return out;
}

//---------------------------------------------------------------------------//
cplx fc_forward(VortexConfig const& config)
{
    validate(config);
    require_short(config.s(), "forward core amplitude");
    return cplx{0, std::sqrt(2 * config.k / pi) * config.r_c
                       * cos_pi(config.mu)};
}

//---------------------------------------------------------------------------//
TailCheck sigma3_tail_check(VortexConfig const& config, double tail_tol)
{
    validate(config);
    double const s = config.s();
    require_short(s, "evanescent tail check");
    auto const pws = build_partial_waves(config, tail_tol);
    cplx tail = 0.0;
    for (auto const& ch : pws.channels)
    {
        if (ch.order > s)
            tail += ch.lambda * ch.upsilon;
    }
    return {2 * std::abs(tail),
            2 * std::tgamma(2.0 / 3.0) * std::cbrt(s / 12)};
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
