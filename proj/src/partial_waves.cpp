//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file partial_waves.cpp
//---------------------------------------------------------------------------//
#include "abvortex/partial_waves.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "abvortex/errors.hpp"
#include "abvortex/specfun.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
constexpr int consecutive_small = 5;

/*!
 * Reflection coefficient N_J / (N_J + i N_Y) from scaled cylinder functions.
 *
 * With t = N_Y / N_J the value is 1/(1 + i t), evaluated through 1/t when
 * |t| > 1 so that neither branch divides by a small number.
 */
cplx upsilon_from(ScaledCylFun const& f, double u, double cr, double sr)
{
    double const nj = cr * f.j + sr * u * f.jp;
    double const ny = cr * f.y + sr * u * f.yp;
    if (nj == 0.0)
        return 0.0;
    if (ny == 0.0)
        return 1.0;
    int const de = f.y_exp - f.j_exp;
    double const lg = std::log2(std::fabs(ny / nj)) + de;
    if (lg <= 0.0)
    {
        double const t = std::ldexp(ny / nj, de);
        double const den = 1.0 + t * t;
        return {1.0 / den, -t / den};
    }
    double const w = std::ldexp(nj / ny, -de);
    double const den = 1.0 + w * w;
    return {w * w / den, -w / den};
}

struct RobinWeights
{
    double cr;
    double sr;
};

RobinWeights robin_weights(double rho)
{
    if (!(rho >= 0.0 && rho < 1.0))
        throw DomainError("Robin parameter must lie in [0, 1)");
    return {cos_pi(rho), sin_pi(rho)};
}

//---------------------------------------------------------------------------//
struct LadderSide
{
    std::vector<cplx> values;  // included reflection coefficients
    double tail{};
};

/*!
 * Reflection coefficients along one ladder of orders base + skip + m.
 *
 * Every order up to min_order is kept; after that the ladder grows until
 * consecutive_small values fall below tol and the geometric extrapolation
 * of the omitted remainder is below tol / 2.
 */
LadderSide scan_side(double base,
                     std::size_t skip,
                     double u,
                     double rho,
                     double min_order,
                     double tol,
                     std::size_t cap)
{
    std::size_t const required
        = min_order < base + skip
              ? 0
              : static_cast<std::size_t>(std::floor(min_order - base)) + 1
                    - skip;
    std::size_t count = required + 2 * consecutive_small + 16;
    while (true)
    {
        if (count > cap)
        {
            std::ostringstream os;
            os << "partial-wave truncation exceeds the channel cap of "
               << cap;
            throw NumericalError(os.str());
        }
        auto ladder = upsilon_ladder(base, u, rho, count + skip);
        ladder.erase(ladder.begin(), ladder.begin() + skip);

        int run = 0;
        for (std::size_t i = 0; i < ladder.size(); ++i)
        {
            double const mag = std::abs(ladder[i]);
            run = (i >= required && mag < tol) ? run + 1 : 0;
            if (run < consecutive_small)
                continue;
            double const prev = std::abs(ladder[i - 1]);
            double tail = 0.0;
            if (mag > 0.0)
            {
                double const q = mag / prev;
                tail = q < 1.0 ? mag * q / (1.0 - q)
                               : std::numeric_limits<double>::infinity();
            }
            if (tail <= 0.5 * tol)
            {
                ladder.resize(i + 1);
                return {std::move(ladder), tail};
            }
        }
        count *= 2;
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
cplx upsilon(double order, double u, double rho)
{
    auto const w = robin_weights(rho);
    return upsilon_from(bessel_jy_scaled(order, u), u, w.cr, w.sr);
}

std::vector<cplx>
upsilon_ladder(double base, double u, double rho, std::size_t count)
{
    auto const w = robin_weights(rho);
    auto const funcs = bessel_jy_ladder(base, u, count);
    std::vector<cplx> out(funcs.size());
    for (std::size_t i = 0; i < funcs.size(); ++i)
        out[i] = upsilon_from(funcs[i], u, w.cr, w.sr);
    return out;
}

//---------------------------------------------------------------------------//
cplx channel_phase(long n, double mu)
{
    long const nu = static_cast<long>(std::floor(mu));
    double const a = mu - std::floor(mu);
    long const abs_n = n < 0 ? -n : n;
    // |n - mu| = (nu - n) + a below the flux, (n - nu - 1) + (1 - a) above
    long whole;
    double frac;
    if (n <= nu)
    {
        whole = abs_n - (nu - n);
        frac = -a;
    }
    else
    {
        whole = abs_n - n + nu;
        frac = a;
    }
    double const parity = (whole % 2 == 0) ? 1.0 : -1.0;
    return parity * cis_pi(frac);
}

//---------------------------------------------------------------------------//
/*!
 * Build the channel set for a configuration.
 *
 * Orders below the flux form the ladder a, a+1, ... (n = nu, nu-1, ...) and
 * orders above it the ladder 1-a, 2-a, ... (n = nu+1, nu+2, ...), where a is
 * the fractional part of mu.
 */
PartialWaveSet build_partial_waves(VortexConfig const& config,
                                   double tail_tol,
                                   std::size_t max_channels)
{
    validate(config);
    if (!(tail_tol > 0.0))
        throw DomainError("tail tolerance must be positive");

    double const s = config.s();
    double const min_order = s + 10.0 + 5.0 * std::cbrt(s);
    long const nu = config.nu();
    double const a = config.frac_mu();

    auto const below = scan_side(
        a, 0, s, config.rho, min_order, tail_tol, max_channels);
    auto const above = a > 0.0 ? scan_side(1.0 - a,
                                           0,
                                           s,
                                           config.rho,
                                           min_order,
                                           tail_tol,
                                           max_channels)
                               : scan_side(0.0,
                                           1,
                                           s,
                                           config.rho,
                                           min_order,
                                           tail_tol,
                                           max_channels);
    if (below.values.size() + above.values.size() > max_channels)
        throw NumericalError("partial-wave truncation exceeds channel cap");

    PartialWaveSet pws;
    pws.config = config;
    pws.tail_bound = below.tail + above.tail;
    pws.channels.reserve(below.values.size() + above.values.size());
    for (std::size_t m = below.values.size(); m-- > 0;)
    {
        PartialWaveChannel ch;
        ch.n = nu - static_cast<long>(m);
        ch.order = a + static_cast<double>(m);
        ch.upsilon = below.values[m];
        ch.lambda = channel_phase(ch.n, config.mu);
        pws.channels.push_back(ch);
    }
    for (std::size_t m = 0; m < above.values.size(); ++m)
    {
        PartialWaveChannel ch;
        ch.n = nu + 1 + static_cast<long>(m);
        ch.order = (1.0 - a) + static_cast<double>(m);
        ch.upsilon = above.values[m];
        ch.lambda = channel_phase(ch.n, config.mu);
        pws.channels.push_back(ch);
    }
    return pws;
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
