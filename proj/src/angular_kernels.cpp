//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file angular_kernels.cpp
//---------------------------------------------------------------------------//
#include "abvortex/angular_kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "abvortex/errors.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double tie_window = 1e-12;
constexpr double tie_shift = 1e-9;
constexpr double small_phi = 1e-6;
constexpr double small_phase = 1e-3;

// sum_{n=1}^{N} n^k for k = 0..4
std::array<double, 5> faulhaber(double N)
{
    double const t = N * (N + 1) / 2;
    return {N,
            t,
            N * (N + 1) * (2 * N + 1) / 6,
            t * t,
            N * (N + 1) * (2 * N + 1) * (3 * N * N + 3 * N - 1) / 30};
}

// sum_{n=a}^{b} n^k for k = 0..4
std::array<double, 5> power_sums(long a, long b)
{
    std::array<double, 5> out{};
    if (a > b)
        return out;
    if (a >= 1)
    {
        auto hi = faulhaber(static_cast<double>(b));
        auto lo = faulhaber(static_cast<double>(a - 1));
        for (int k = 0; k < 5; ++k)
            out[k] = hi[k] - lo[k];
        return out;
    }
    if (b <= -1)
    {
        out = power_sums(-b, -a);
        for (int k = 1; k < 5; k += 2)
            out[k] = -out[k];
        return out;
    }
    auto neg = faulhaber(static_cast<double>(-a));
    auto pos = faulhaber(static_cast<double>(b));
    for (int k = 0; k < 5; ++k)
        out[k] = pos[k] + ((k % 2) ? -neg[k] : neg[k]);
    out[0] += 1;
    return out;
}

// sum_{n=a}^{b} exp(i n phi) by Taylor expansion in phi
cplx exp_sum_series(long a, long b, double phi)
{
    auto const p = power_sums(a, b);
    double const p2 = phi * phi;
    return {p[0] - p2 / 2 * p[2] + p2 * p2 / 24 * p[4],
            phi * p[1] - phi * p2 / 6 * p[3]};
}

bool use_series(long a, long b, double phi)
{
    double const reach = static_cast<double>(std::max(std::labs(a),
                                                      std::labs(b)));
    return std::fabs(phi) < small_phi && reach * std::fabs(phi) < small_phase;
}

// 1 - cos(t) without cancellation
double one_minus_cos(double t)
{
    double const h = std::sin(0.5 * t);
    return 2 * h * h;
}

void require_noninteger(double mu)
{
    if (mu == std::floor(mu))
        throw DomainError("Gamma kernel requires a non-integer flux");
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
KernelCase kernel_case(double x, double mu)
{
    if (!(x > 0.0))
        throw DomainError("kernel cutoff must be positive");
    auto near_int = [](double v) {
        return std::fabs(v - std::round(v)) < tie_window;
    };
    if (near_int(x + mu) || near_int(x - mu))
        x += tie_shift;

    KernelCase c;
    c.x = x;
    c.s_plus = static_cast<long>(std::floor(x + mu));
    c.s_minus = static_cast<long>(std::floor(x - mu));
    c.nu = static_cast<long>(std::floor(mu));
    switch (c.s_plus - c.s_minus - 2 * c.nu)
    {
        case 1:
            c.branch = KernelBranch::even_split;
            c.s_c = c.s_plus - c.nu;
            break;
        case 0:
            c.branch = KernelBranch::centered_nu;
            c.s_c = c.s_plus - c.nu;
            break;
        default:
            c.branch = KernelBranch::centered_nu1;
            c.s_c = c.s_plus - c.nu - 1;
            break;
    }
    return c;
}

//---------------------------------------------------------------------------//
double delta_x(double x, double phi)
{
    if (!(x > 0.0))
        throw DomainError("kernel cutoff must be positive");
    phi = normalize_angle(phi);
    long const n = static_cast<long>(std::floor(x));
    if (use_series(-n, n, phi))
        return exp_sum_series(-n, n, phi).real() / (2 * pi);
    return std::sin((n + 0.5) * phi) / (2 * pi * std::sin(0.5 * phi));
}

//---------------------------------------------------------------------------//
cplx delta_nu_x(double x, double mu, double phi)
{
    phi = normalize_angle(phi);
    auto const c = kernel_case(x, mu);
    if (use_series(-c.s_minus, c.s_plus, phi))
        return exp_sum_series(-c.s_minus, c.s_plus, phi) / (2 * pi);

    double const sh = std::sin(0.5 * phi);
    double const nu = static_cast<double>(c.nu);
    double const sc = static_cast<double>(c.s_c);
    switch (c.branch)
    {
        case KernelBranch::even_split:
            return cis((nu + 0.5) * phi) * std::sin(sc * phi) / (2 * pi * sh);
        case KernelBranch::centered_nu:
            return cis(nu * phi) * std::sin((sc + 0.5) * phi)
                   / (2 * pi * sh);
        case KernelBranch::centered_nu1:
            return cis((nu + 1) * phi) * std::sin((sc + 0.5) * phi)
                   / (2 * pi * sh);
    }
    return {};
}

//---------------------------------------------------------------------------//
cplx gamma_nu_x(double x, double mu, double phi)
{
    require_noninteger(mu);
    phi = normalize_angle(phi);
    auto const c = kernel_case(x, mu);
    if (use_series(-c.s_minus, c.s_plus, phi))
    {
        cplx const above = exp_sum_series(c.nu + 1, c.s_plus, phi);
        cplx const below = exp_sum_series(-c.s_minus, c.nu, phi);
        return (above - below) / (cplx{0, 2 * pi});
    }

    double const sh = std::sin(0.5 * phi);
    double const nu = static_cast<double>(c.nu);
    double const sc = static_cast<double>(c.s_c);
    switch (c.branch)
    {
        case KernelBranch::even_split:
            return cis((nu + 0.5) * phi) * one_minus_cos(sc * phi)
                   / (2 * pi * sh);
        case KernelBranch::centered_nu:
            return cis(nu * phi) / (2 * pi)
                   * cplx{one_minus_cos((sc + 0.5) * phi) / sh
                              - std::tan(0.25 * phi),
                          1.0};
        case KernelBranch::centered_nu1:
            return cis((nu + 1) * phi) / (2 * pi)
                   * cplx{one_minus_cos((sc + 0.5) * phi) / sh
                              - std::tan(0.25 * phi),
                          -1.0};
    }
    return {};
}

//---------------------------------------------------------------------------//
cplx gamma_nu(double mu, double phi)
{
    require_noninteger(mu);
    phi = normalize_angle(phi);
    if (phi == 0.0)
        throw DomainError(
            "Gamma kernel is singular in the forward direction; use the "
            "near-forward error-function form");
    double const nu = std::floor(mu);
    return cis((nu + 0.5) * phi) / (2 * pi * std::sin(0.5 * phi));
}

//---------------------------------------------------------------------------//
double delta_tilde(double x, double phi)
{
    if (!(x > 0.0))
        throw DomainError("kernel cutoff must be positive");
    phi = normalize_angle(phi);
    if (std::fabs(phi) < small_phi && x * std::fabs(phi) < small_phase)
        return x / pi * (1 - (x * x / 3 - 1.0 / 12) * phi * phi);
    double const num = std::sin(x * phi);
    double const den = std::sin(0.5 * phi);
    return num * num / (4 * pi * x * den * den);
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
