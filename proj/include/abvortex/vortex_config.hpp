//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/vortex_config.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace abvortex
{
//---------------------------------------------------------------------------//
/*!
 * Physical scenario: wavenumber, core radius, reduced flux and Robin
 * parameter.
 *
 * rho = 0 is the Dirichlet condition and rho = 1/2 the Neumann condition.
 */
struct VortexConfig
{
    double k{1};    //!< Wavenumber [1/length]
    double r_c{1};  //!< Core radius [length]
    double mu{0};   //!< Reduced flux Phi/Phi_0
    double rho{0};  //!< Robin parameter in [0, 1)

    //! Dimensionless size k r_c
    double s() const { return k * r_c; }
    //! Integer part of the flux (floor, also for negative mu)
    long nu() const { return static_cast<long>(std::floor(mu)); }
    //! Fractional part of the flux in [0, 1)
    double frac_mu() const { return mu - std::floor(mu); }
    //! Whether the flux is an integer
    bool integer_flux() const { return mu == std::floor(mu); }
};

//! Throw DomainError unless the configuration is physically valid.
inline void validate(VortexConfig const& c)
{
    std::ostringstream os;
    if (!(c.k > 0) || !std::isfinite(c.k))
        os << "wavenumber k must be positive (got " << c.k << ")";
    else if (!(c.r_c > 0) || !std::isfinite(c.r_c))
        os << "core radius r_c must be positive (got " << c.r_c << ")";
    else if (!std::isfinite(c.mu))
        os << "flux mu must be finite";
    else if (!(c.rho >= 0 && c.rho < 1))
        os << "Robin parameter rho must lie in [0, 1) (got " << c.rho << ")";
    else
        return;
    throw DomainError(os.str());
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
