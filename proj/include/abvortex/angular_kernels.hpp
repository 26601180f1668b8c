//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/angular_kernels.hpp
//! Regularized angular delta-type kernels.
//!
//! With s_plus = floor(x + mu), s_minus = floor(x - mu) and nu = floor(mu)
//! the included indices are -s_minus <= n <= s_plus. The difference
//! s_plus - s_minus - 2 nu is 0, 1 or 2 and selects one of three closed forms.
//---------------------------------------------------------------------------//
#pragma once

#include "angle.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
//! Closed-form branch of the truncated kernels.
enum class KernelBranch
{
    even_split,  //!< Equal counts above and below mu: s_plus - s_minus = 2nu+1
    centered_nu,  //!< Odd count centered on nu: s_plus - s_minus = 2nu
    centered_nu1,  //!< Odd count centered on nu+1: s_plus - s_minus = 2nu+2
};

//! Branch selection and integer bookkeeping for a (x, mu) pair.
struct KernelCase
{
    long s_plus{};
    long s_minus{};
    long nu{};
    long s_c{};
    KernelBranch branch{KernelBranch::even_split};
    double x{};  //!< Cutoff after the tie-breaking shift
};

//---------------------------------------------------------------------------//
// Classify a cutoff; x +- mu within 1e-12 of an integer is shifted by +1e-9
KernelCase kernel_case(double x, double mu);

// (1/2pi) sum_{|n| <= x} exp(i n phi)
double delta_x(double x, double phi);

// (1/2pi) sum_{|n - mu| <= x} exp(i n phi)
cplx delta_nu_x(double x, double mu, double phi);

// (1/2pi i) sum_{|n - mu| <= x} sgn(n - mu) exp(i n phi); mu non-integer
cplx gamma_nu_x(double x, double mu, double phi);

// exp(i (nu + 1/2) phi) / (2 pi sin(phi/2)); phi != 0, mu non-integer
cplx gamma_nu(double mu, double phi);

// sin^2(x phi) / (4 pi x sin^2(phi/2)), limit x/pi at phi = 0
double delta_tilde(double x, double phi);

//---------------------------------------------------------------------------//
}  // namespace abvortex
