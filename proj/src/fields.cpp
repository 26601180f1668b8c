//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields.cpp
//---------------------------------------------------------------------------//
#include "abvortex/fields.hpp"

#include <algorithm>
#include <cmath>

#include "abvortex/errors.hpp"
#include "abvortex/partial_waves.hpp"
#include "abvortex/specfun.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
// upsilon * (a + i b) * 2^e without forming an overflowing intermediate
cplx scaled_product(cplx ups, double a, double b, int e)
{
    double const mag = std::abs(ups);
    if (mag == 0.0)
        return 0.0;
    int const eu = std::ilogb(mag);
    // Scale the components directly: 2^-eu overflows for subnormal ups
    cplx const us{std::ldexp(ups.real(), -eu), std::ldexp(ups.imag(), -eu)};
    cplx const p = us * cplx{a, b};
    return {std::ldexp(p.real(), e + eu), std::ldexp(p.imag(), e + eu)};
}

std::size_t ladder_count(double base, double max_order)
{
    return max_order < base
               ? 0
               : static_cast<std::size_t>(std::floor(max_order - base)) + 1;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
double field_order_cutoff(double kr)
{
    return kr + 8.0 * std::cbrt(kr) + 20.0;
}

//---------------------------------------------------------------------------//
RadialExpansion::RadialExpansion(VortexConfig const& config, double r) : r_(r)
{
    validate(config);
    if (!(r >= config.r_c))
        throw DomainError("field point lies inside the vortex core (r < r_c)");

    double const kr = config.k * r;
    double const max_order = field_order_cutoff(kr);
    truncation_n_ = static_cast<long>(std::ceil(max_order));
    long const nu = config.nu();
    double const a = config.frac_mu();

    // Ladder below the flux (n = nu - m) and above it (n = nu + 1 + m)
    struct Side
    {
        double base;
        std::size_t skip;
        long n0;
        long dir;
    };
    Side const sides[] = {{a, 0, nu, -1},
                          {a > 0 ? 1.0 - a : 0.0, a > 0 ? 0u : 1u, nu + 1, 1}};
    for (auto const& side : sides)
    {
        std::size_t const count = ladder_count(side.base, max_order);
        if (count <= side.skip)
            continue;
        auto const bes = bessel_jy_ladder(side.base, kr, count);
        auto const ups
            = upsilon_ladder(side.base, config.s(), config.rho, count);
        for (std::size_t i = side.skip; i < count; ++i)
        {
            long const m = static_cast<long>(i - side.skip);
            long const n = side.n0 + side.dir * m;
            double const order = side.base + static_cast<double>(i);
            long const abs_n = n < 0 ? -n : n;
            cplx const phase = (abs_n % 2 == 0 ? 1.0 : -1.0)
                               * cis_pi(-0.5 * order);
            auto const& f = bes[i];
            double const jj = std::ldexp(f.j, f.j_exp);
            double const jp = std::ldexp(f.jp, f.j_exp);
            // J - ups (J + iY), with the J and Y exponents kept apart
            cplx const scat_j = scaled_product(ups[i], f.j, 0.0, f.j_exp);
            cplx const scat_y = scaled_product(ups[i], 0.0, f.y, f.y_exp);
            cplx const dscat_j = scaled_product(ups[i], f.jp, 0.0, f.j_exp);
            cplx const dscat_y = scaled_product(ups[i], 0.0, f.yp, f.y_exp);
            n_.push_back(n);
            c_.push_back(phase * (jj - scat_j - scat_y));
            d_.push_back(config.k * phase * (jp - dscat_j - dscat_y));
        }
    }
}

cplx RadialExpansion::psi(double phi) const
{
    cplx sum = 0.0;
    for (std::size_t i = 0; i < n_.size(); ++i)
        sum += cis(static_cast<double>(n_[i]) * phi) * c_[i];
    return sum;
}

cplx RadialExpansion::dpsi_dr(double phi) const
{
    cplx sum = 0.0;
    for (std::size_t i = 0; i < n_.size(); ++i)
        sum += cis(static_cast<double>(n_[i]) * phi) * d_[i];
    return sum;
}

//---------------------------------------------------------------------------//
PlaneWaveComparison psi_plane(double k, FieldPoint point)
{
    if (!(k > 0.0))
        throw DomainError("wavenumber must be positive");
    if (!(point.r >= 0.0))
        throw DomainError("radius must be nonnegative");
    double const phi = normalize_angle(point.phi);
    double const kr = k * point.r;
    PlaneWaveComparison out;
    out.direct = cis(kr * std::cos(phi));
    if (kr == 0.0)
    {
        out.partial_wave = 1.0;
        return out;
    }
    std::size_t const count = ladder_count(0.0, field_order_cutoff(kr));
    auto const bes = bessel_jy_ladder(0.0, kr, count);
    cplx sum = std::ldexp(bes[0].j, bes[0].j_exp);
    for (std::size_t n = 1; n < count; ++n)
    {
        // i^n (exp(i n phi) + exp(-i n phi))
        cplx const in = cis_pi(0.5 * static_cast<double>(n));
        sum += in * 2.0 * std::cos(static_cast<double>(n) * phi)
               * std::ldexp(bes[n].j, bes[n].j_exp);
    }
    out.partial_wave = sum;
    return out;
}

//---------------------------------------------------------------------------//
FieldSample psi_vortex(VortexConfig const& config, FieldPoint point)
{
    point.phi = normalize_angle(point.phi);
    RadialExpansion const rad(config, point.r);
    return {point, rad.psi(point.phi), rad.truncation_n()};
}

//---------------------------------------------------------------------------//
double
boundary_residual(VortexConfig const& config, std::vector<double> const& phis)
{
    RadialExpansion const rad(config, config.r_c);
    double const cr = cos_pi(config.rho);
    double const sr = sin_pi(config.rho);
    double worst = 0.0;
    for (double phi : phis)
    {
        phi = normalize_angle(phi);
        cplx const bc = cr * rad.psi(phi) + sr * config.r_c * rad.dpsi_dr(phi);
        worst = std::max(worst, std::abs(bc));
    }
    return worst;
}

//---------------------------------------------------------------------------//
std::vector<cplx> incident_normalization(VortexConfig const& config,
                                         std::vector<double> const& radii)
{
    std::vector<cplx> out;
    out.reserve(radii.size());
    for (double r : radii)
    {
        RadialExpansion const rad(config, r);
        out.push_back(cis(config.k * r) * rad.psi(pi));
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
