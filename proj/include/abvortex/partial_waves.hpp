//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/partial_waves.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <vector>

#include "angle.hpp"
#include "vortex_config.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
inline constexpr double default_tail_tol = 1e-14;
inline constexpr std::size_t default_max_channels = 1000000;

//---------------------------------------------------------------------------//
/*!
 * One angular-momentum channel of the vortex solution.
 */
struct PartialWaveChannel
{
    long n{};         //!< Angular momentum index
    double order{};   //!< |n - mu|
    cplx upsilon{};   //!< Reflection coefficient at k r_c
    cplx lambda{};    //!< exp(i (|n| - |n - mu|) pi)
};

//---------------------------------------------------------------------------//
/*!
 * Truncated set of channels, ordered by increasing n.
 *
 * tail_bound estimates the summed |upsilon| of every omitted channel.
 */
struct PartialWaveSet
{
    VortexConfig config;
    std::vector<PartialWaveChannel> channels;
    double tail_bound{};

    long n_min() const { return channels.front().n; }
    long n_max() const { return channels.back().n; }
    std::size_t size() const { return channels.size(); }
};

//---------------------------------------------------------------------------//
// Reflection coefficient for a single order
cplx upsilon(double order, double u, double rho);

// Reflection coefficients at orders base + m, m = 0 .. count-1
std::vector<cplx>
upsilon_ladder(double base, double u, double rho, std::size_t count);

// Channels with |n - mu| <= s + margin plus a certified decaying tail
PartialWaveSet
build_partial_waves(VortexConfig const& config,
                    double tail_tol = default_tail_tol,
                    std::size_t max_channels = default_max_channels);

// Phase exp(i (|n| - |n - mu|) pi) from exact integer and fractional parts
cplx channel_phase(long n, double mu);

//---------------------------------------------------------------------------//
}  // namespace abvortex
