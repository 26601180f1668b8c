//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cross_sections.cpp
//---------------------------------------------------------------------------//
#include "abvortex/cross_sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "abvortex/amplitudes.hpp"
#include "abvortex/angular_kernels.hpp"
#include "abvortex/errors.hpp"

namespace abvortex
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double short_wavelength_min = 10.0;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int peak_panels = 16;
constexpr double peak_width = 10.0;
// Empirical size of the oscillatory band around the closed form, in units
// of 1/k (measured up to k r_c = 400)
constexpr double closed_form_band = 16.0;

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

long max_abs_n(PartialWaveSet const& pws)
{
    return std::max(std::labs(pws.n_min()), std::labs(pws.n_max()));
}

// |fc(phi)|^2 by Horner's rule in exp(i phi); the channels are contiguous
// in n, so the common factor exp(i n_min phi) drops out of the modulus
class CoreIntensity
{
  public:
    explicit CoreIntensity(PartialWaveSet const& pws)
        : scale_(2 / (pws.config.k * pi))
    {
        coef_.reserve(pws.size());
        for (auto const& ch : pws.channels)
            coef_.push_back(ch.lambda * ch.upsilon);
    }

    double operator()(double phi) const
    {
        cplx const z = cis(phi);
        cplx p = 0.0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it)
            p = p * z + *it;
        return scale_ * std::norm(p);
    }

  private:
    double scale_;
    std::vector<cplx> coef_;
};

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(CrossSectionMethod m)
{
    switch (m)
    {
        case CrossSectionMethod::parseval:
            return "parseval";
        case CrossSectionMethod::quadrature:
            return "quadrature";
        case CrossSectionMethod::closed_short:
            return "closed_short";
    }
    return {};
}

//---------------------------------------------------------------------------//
double dsigma_exact(PartialWaveSet const& pws, double phi)
{
    return std::norm(fc_exact(pws, phi).value);
}

//---------------------------------------------------------------------------//
double dsigma_asymptotic(VortexConfig const& config, double phi)
{
    validate(config);
    double const s = config.s();
    require_short(s, "asymptotic differential cross section");
    phi = normalize_angle(phi);
    double const c2 = cos_pi(2 * config.mu);
    double const s2 = sin_pi(2 * config.mu);
    double const peak = c2 * delta_tilde(s, phi)
                        + (1 - c2 - s2 * std::sin(s * phi))
                              * delta_tilde(0.5 * s, phi);
    return 2 * config.r_c * peak
           + 0.5 * config.r_c * std::fabs(std::sin(0.5 * phi));
}

//---------------------------------------------------------------------------//
CrossSectionReport sigma_parseval(PartialWaveSet const& pws)
{
    double sum = 0.0;
    for (auto const& ch : pws.channels)
        sum += std::norm(ch.upsilon);
    double const k = pws.config.k;
    CrossSectionReport out;
    out.method = CrossSectionMethod::parseval;
    out.sigma = 4 / k * sum;
    out.truncation_n = max_abs_n(pws);
    out.est_error = 4 / k * pws.tail_bound
                    + 4 * eps * static_cast<double>(pws.size()) * out.sigma;
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Panels: peak_panels per side inside |phi| <= peak_width / (k r_c), then
 * panels spanning about a quarter period of the fastest Fourier mode.
 */
CrossSectionReport sigma_quadrature(PartialWaveSet const& pws)
{
    using boost::math::quadrature::gauss_kronrod;
    double const s = pws.config.s();
    double const inner = std::min(pi, peak_width / s);
    long const nmax = max_abs_n(pws);
    CoreIntensity const integrand(pws);

    std::vector<double> edges;
    for (int i = 0; i <= peak_panels; ++i)
        edges.push_back(inner * i / peak_panels);
    if (inner < pi)
    {
        double const span = pi - inner;
        auto const outer = static_cast<long>(
            std::ceil(span * 2 * static_cast<double>(nmax + 1) / pi));
        for (long i = 1; i <= outer; ++i)
            edges.push_back(inner + span * static_cast<double>(i)
                                        / static_cast<double>(outer));
    }

    double total = 0.0;
    double err = 0.0;
    for (int side : {-1, 1})
    {
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        {
            double a = side * edges[i];
            double b = side * edges[i + 1];
            if (a > b)
                std::swap(a, b);
            double panel_err = 0.0;
            total += gauss_kronrod<double, 31>::integrate(
                integrand, a, b, 2, 1e-12, &panel_err);
            err += panel_err;
        }
    }
    CrossSectionReport out;
    out.method = CrossSectionMethod::quadrature;
    out.sigma = total;
    out.truncation_n = nmax;
    out.est_error = err + 4 / pws.config.k * pws.tail_bound;
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Short-wavelength closed form, selected by the kernel branch at x = k r_c.
 *
 * The printed expressions are formally complex; a non-negligible imaginary
 * part means the branch bookkeeping is inconsistent and raises
 * NumericalError.
 */
CrossSectionReport sigma_closed_short(VortexConfig const& config)
{
    validate(config);
    double const s = config.s();
    require_short(s, "closed short-wavelength cross section");
    double const k = config.k;
    double const mu = config.mu;
    auto const kc = kernel_case(s, mu);

    double const theta = std::atan2(2 * s * sin_pi(config.rho),
                                    2 * cos_pi(config.rho)
                                        - sin_pi(config.rho));
    double const a1 = std::sin(2 * s + 2 * theta);
    double const a2 = std::cos(2 * s + 2 * theta);
    cplx const e_nu = cis_pi(static_cast<double>(kc.nu));
    cplx const e_sc = cis_pi(static_cast<double>(kc.s_c));
    double const sc = static_cast<double>(kc.s_c);

    cplx sigma;
    if (kc.branch == KernelBranch::even_split)
    {
        sigma = 4 / k * sc - 2 / k * sin_pi(mu) * e_nu * (1.0 - e_sc) * a2;
    }
    else
    {
        double const pm = kc.branch == KernelBranch::centered_nu ? 1 : -1;
        sigma = 4 / k * (sc + 0.5) + pm * 2 / k * cos_pi(mu) * e_nu * e_sc * a1
                - 2 / k * sin_pi(mu) * e_nu * a2;
    }
    if (std::fabs(sigma.imag()) > 1e-10 * std::fabs(sigma.real()))
        throw NumericalError("closed-form cross section is not real");

    CrossSectionReport out;
    out.method = CrossSectionMethod::closed_short;
    out.sigma = sigma.real();
    out.truncation_n = kc.s_c;
    out.est_error = closed_form_band / k;
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace abvortex
