//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli/commands.cpp
//---------------------------------------------------------------------------//
#include "abvortex/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "abvortex/amplitudes.hpp"
#include "abvortex/asymptotics.hpp"
#include "abvortex/cross_sections.hpp"
#include "abvortex/errors.hpp"
#include "abvortex/fields.hpp"
#include "abvortex/unitarity.hpp"

namespace abvortex::cli
{
namespace
{
//---------------------------------------------------------------------------//
constexpr double short_wavelength_min = 10.0;

std::string describe(VortexConfig const& c)
{
    std::ostringstream os;
    os.precision(17);
    os << "k=" << c.k << " r_c=" << c.r_c << " mu=" << c.mu
       << " rho=" << c.rho;
    return os.str();
}

void check_config(VortexConfig const& c)
{
    try
    {
        validate(c);
    }
    catch (DomainError const& e)
    {
        throw UsageError(e.what());
    }
}

// Run one evaluation, attaching the parameter set to any failure
template<class F>
auto guarded(std::string const& where, F&& f) -> decltype(f())
{
    try
    {
        return f();
    }
    catch (std::exception const& e)
    {
        throw ComputeError(e.what() + std::string(" at ") + where);
    }
}

Cell opt_double(bool present, double v)
{
    return present ? Cell{v} : Cell{};
}

PartialWaveSet build(VortexConfig const& c, double tail_tol)
{
    return guarded(describe(c),
                   [&] { return build_partial_waves(c, tail_tol); });
}

void add_report_row(Table& t, UnitarityReport const& r)
{
    bool const exact = is_exact(r.identity);
    std::string status = "info";
    if (exact)
        status = r.rel_residual > exact_identity_gate ? "fail" : "pass";
    t.add_row({r.config.k,
               r.config.r_c,
               r.config.mu,
               r.config.rho,
               std::string(to_string(r.identity)),
               r.phi1,
               r.phi2,
               r.lhs.real(),
               r.lhs.imag(),
               r.rhs.real(),
               r.rhs.imag(),
               r.abs_residual,
               r.rel_residual,
               std::string(exact ? "true" : "false"),
               status});
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<double> Range::values() const
{
    if (count < 1)
        throw UsageError("sweep count must be at least 1");
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw UsageError("sweep endpoints must be finite");
    if (spacing == Spacing::log && !(start > 0 && stop > 0))
        throw UsageError("log spacing requires positive endpoints");

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
    {
        double const t = count == 1 ? 0.0
                                    : static_cast<double>(i)
                                          / static_cast<double>(count - 1);
        // Endpoints are reproduced exactly
        if (i == 0)
            out.push_back(start);
        else if (i + 1 == count)
            out.push_back(stop);
        else if (spacing == Spacing::linear)
            out.push_back(start + (stop - start) * t);
        else
            out.push_back(std::exp(std::log(start)
                                   + (std::log(stop) - std::log(start)) * t));
    }
    return out;
}

//---------------------------------------------------------------------------//
std::vector<VortexConfig> SweepSpec::configs() const
{
    if (!param || *param == SweepParam::phi)
    {
        check_config(base);
        return {base};
    }
    std::vector<VortexConfig> out;
    for (double v : range.values())
    {
        VortexConfig c = base;
        switch (*param)
        {
            case SweepParam::k:
                c.k = v;
                break;
            case SweepParam::r_c:
                c.r_c = v;
                break;
            case SweepParam::mu:
                c.mu = v;
                break;
            case SweepParam::rho:
                c.rho = v;
                break;
            case SweepParam::phi:
                break;
        }
        check_config(c);
        out.push_back(c);
    }
    return out;
}

std::vector<double> SweepSpec::angles() const
{
    if (param && *param == SweepParam::phi)
        return range.values();
    return phis;
}

//---------------------------------------------------------------------------//
std::vector<VortexConfig> default_suite()
{
    std::vector<VortexConfig> out;
    for (double s : {0.5, 5.0, 20.0})
    {
        for (auto [mu, rho] : {std::pair{0.0, 0.0},
                               std::pair{0.3, 0.25},
                               std::pair{0.5, 0.5}})
        {
            out.push_back({s, 1.0, mu, rho});
        }
    }
    return out;
}

//---------------------------------------------------------------------------//
Table cmd_amplitude(SweepSpec const& spec)
{
    Table t;
    t.columns = {"k",
                 "r_c",
                 "mu",
                 "rho",
                 "phi",
                 "fc_re",
                 "fc_im",
                 "f0_re",
                 "f0_im",
                 "fc_asym_re",
                 "fc_asym_im",
                 "est_error"};
    auto const phis = spec.angles();
    for (auto const& c : spec.configs())
    {
        auto const pws = build(c, spec.tail_tol);
        bool const short_wave = c.s() > short_wavelength_min;
        for (double phi_in : phis)
        {
            double const phi = normalize_angle(phi_in);
            std::ostringstream where;
            where.precision(17);
            where << describe(c) << " phi=" << phi;
            guarded(where.str(), [&] {
                auto const fc = fc_exact(pws, phi);
                bool const forward = phi == 0.0;
                // The bare flux amplitude is singular in the forward direction
                // except when it vanishes identically
                bool const has_f0 = !forward || c.integer_flux();
                cplx const f = has_f0 && !forward ? f0(c.k, c.mu, phi).value
                                                  : cplx{};
                cplx asym{};
                if (short_wave)
                    asym = forward ? fc_forward(c)
                                   : fc_quasiclassical(c, phi).value;
                t.add_row({c.k,
                           c.r_c,
                           c.mu,
                           c.rho,
                           phi,
                           fc.value.real(),
                           fc.value.imag(),
                           opt_double(has_f0, f.real()),
                           opt_double(has_f0, f.imag()),
                           opt_double(short_wave, asym.real()),
                           opt_double(short_wave, asym.imag()),
                           fc.est_error});
                return 0;
            });
        }
    }
    return t;
}

//---------------------------------------------------------------------------//
Table cmd_xsection(SweepSpec const& spec)
{
    Table t;
    t.columns = {"k",
                 "r_c",
                 "mu",
                 "rho",
                 "sigma_parseval",
                 "sigma_quadrature",
                 "sigma_closed_short",
                 "sigma_over_4rc",
                 "truncation_n",
                 "est_error"};
    for (auto const& c : spec.configs())
    {
        auto const pws = build(c, spec.tail_tol);
        guarded(describe(c), [&] {
            auto const parseval = sigma_parseval(pws);
            auto const quad = sigma_quadrature(pws);
            bool const short_wave = c.s() > short_wavelength_min;
            Cell closed;
            if (short_wave)
                closed = sigma_closed_short(c).sigma;
            t.add_row({c.k,
                       c.r_c,
                       c.mu,
                       c.rho,
                       parseval.sigma,
                       quad.sigma,
                       closed,
                       parseval.sigma / (4 * c.r_c),
                       static_cast<long>(parseval.truncation_n),
                       parseval.est_error});
            return 0;
        });
    }
    return t;
}

//---------------------------------------------------------------------------//
CommandResult cmd_optical_theorem(OpticalTheoremSpec const& spec)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"k",
                 "r_c",
                 "mu",
                 "rho",
                 "identity",
                 "phi1",
                 "phi2",
                 "lhs_re",
                 "lhs_im",
                 "rhs_re",
                 "rhs_im",
                 "abs_residual",
                 "rel_residual",
                 "exact",
                 "status"};
    double const phi1 = normalize_angle(spec.phi1);
    double const phi2 = normalize_angle(spec.phi2);

    for (auto const& c : spec.configs)
    {
        check_config(c);
        auto pws = build(c, spec.tail_tol);
        if (spec.inject_fault && !pws.channels.empty())
        {
            auto it = std::max_element(
                pws.channels.begin(),
                pws.channels.end(),
                [](auto const& a, auto const& b) {
                    return std::abs(a.upsilon) < std::abs(b.upsilon);
                });
            it->upsilon *= 1.01;
        }
        guarded(describe(c), [&] {
            bool const tube = c.mu == 0.0;
            add_report_row(t,
                           tube ? tube_optical_theorem(pws)
                                : vortex_optical_theorem(pws));
            add_report_row(t,
                           tube ? tube_offdiagonal_unitarity(pws, phi1, phi2)
                                : vortex_offdiagonal(pws, phi1, phi2));
            if (c.s() > short_wavelength_min)
            {
                add_report_row(t, quasiclassical_optical_theorem(pws));
            }
            else
            {
                t.add_row({c.k,
                           c.r_c,
                           c.mu,
                           c.rho,
                           std::string(to_string(
                               UnitarityIdentity::quasiclassical_ot)),
                           0.0,
                           0.0,
                           {},
                           {},
                           {},
                           {},
                           {},
                           {},
                           std::string("false"),
                           std::string("n/a")});
            }
            return 0;
        });
    }

    for (auto const& row : t.rows)
    {
        if (std::get<std::string>(row[14]) == "fail")
            result.exit_code = exit_verification;
    }
    return result;
}

//---------------------------------------------------------------------------//
Table cmd_wavefield(VortexConfig const& config,
                    std::vector<double> const& radii,
                    std::vector<double> const& phis)
{
    check_config(config);
    for (double r : radii)
    {
        if (!(r >= config.r_c) || !std::isfinite(r))
        {
            std::ostringstream os;
            os << "radius " << r << " lies inside the core (r_c = "
               << config.r_c << ")";
            throw UsageError(os.str());
        }
    }
    Table t;
    t.columns = {"r", "phi", "psi_re", "psi_im", "truncation_n"};
    for (double r : radii)
    {
        std::ostringstream where;
        where.precision(17);
        where << describe(config) << " r=" << r;
        auto const expansion
            = guarded(where.str(), [&] { return RadialExpansion(config, r); });
        for (double phi_in : phis)
        {
            double const phi = normalize_angle(phi_in);
            cplx const psi = expansion.psi(phi);
            t.add_row({r, phi, psi.real(), psi.imag(), expansion.truncation_n()});
        }
    }
    return t;
}

//---------------------------------------------------------------------------//
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scattering off a finite-radius magnetic vortex", "abvortex"};
    app.require_subcommand(1);

    struct Options
    {
        VortexConfig config;
        double phi{0.0};
        double phi_start{0.0};
        double phi_stop{0.0};
        long phi_count{1};
        std::string sweep;
        double sweep_start{0.0};
        double sweep_stop{0.0};
        long sweep_count{1};
        std::string spacing{"linear"};
        double tail_tol{default_tail_tol};
        std::string format{"csv"};
        std::string output{"-"};
        double r{0.0};
        double r_start{0.0};
        double r_stop{0.0};
        long r_count{1};
        double phi1{0.7};
        double phi2{-1.9};
        bool inject_fault{false};
    } o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--k", o.config.k, "Wavenumber");
        sub->add_option("--rc", o.config.r_c, "Core radius");
        sub->add_option("--mu", o.config.mu, "Reduced flux");
        sub->add_option("--rho", o.config.rho,
                                       "Robin parameter in [0, 1)");
        sub->add_option("--sweep", o.sweep, "Swept parameter")
                  ->check(CLI::IsMember({"k", "rc", "r_c", "mu", "rho", "phi"}));
        sub->add_option("--sweep-start", o.sweep_start);
        sub->add_option("--sweep-stop", o.sweep_stop);
        sub->add_option("--sweep-count", o.sweep_count);
        sub->add_option("--spacing", o.spacing)
            ->check(CLI::IsMember({"linear", "log"}));
        sub->add_option("--tail-tol", o.tail_tol, "Partial-wave tail tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format)
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", o.output, "Output path or - for stdout");
    };
    auto angles = [&](CLI::App* sub) {
        sub->add_option("--phi", o.phi, "Angle in radians");
        sub->add_option("--phi-start", o.phi_start);
        sub->add_option("--phi-stop", o.phi_stop);
        sub->add_option("--phi-count", o.phi_count);
    };

    auto* amp = app.add_subcommand("amplitude", "Scattering amplitudes");
    common(amp);
    angles(amp);
    auto* xs = app.add_subcommand("xsection", "Total cross sections");
    common(xs);
    auto* ot = app.add_subcommand("optical-theorem",
                                  "Unitarity and optical-theorem residuals");
    common(ot);
    ot->add_option("--phi1", o.phi1, "First off-diagonal angle");
    ot->add_option("--phi2", o.phi2, "Second off-diagonal angle");
    ot->add_flag("--inject-fault", o.inject_fault)->group("");
    auto* wf = app.add_subcommand("wavefield", "Wave function on a polar grid");
    common(wf);
    angles(wf);
    wf->add_option("--r", o.r, "Radius");
    wf->add_option("--r-start", o.r_start);
    wf->add_option("--r-stop", o.r_stop);
    wf->add_option("--r-count", o.r_count);

    try
    {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App* const active = app.get_subcommands().front();
    auto was_given = [&](char const* flag) {
        auto const* opt = active->get_option_no_throw(flag);
        return opt && opt->count() > 0;
    };
    auto warn_angles = [&](std::vector<double> const& v) {
        for (double phi : v)
        {
            if (!(phi > -pi && phi <= pi))
            {
                err << "warning: angle " << phi
                    << " normalized to (-pi, pi]: " << normalize_angle(phi)
                    << "\n";
            }
        }
    };

    try
    {
        SweepSpec spec;
        spec.base = o.config;
        spec.tail_tol = o.tail_tol;
        if (!o.sweep.empty())
        {
            static std::map<std::string, SweepParam> const names{
                {"k", SweepParam::k},
                {"rc", SweepParam::r_c},
                {"r_c", SweepParam::r_c},
                {"mu", SweepParam::mu},
                {"rho", SweepParam::rho},
                {"phi", SweepParam::phi}};
            spec.param = names.at(o.sweep);
            spec.range = {o.sweep_start,
                          o.sweep_stop,
                          o.sweep_count,
                          o.spacing == "log" ? Spacing::log : Spacing::linear};
        }
        if (was_given("--phi-start"))
            spec.phis = Range{o.phi_start, o.phi_stop, o.phi_count}.values();
        else
            spec.phis = {o.phi};

        Table table;
        int code = exit_ok;
        if (amp->parsed())
        {
            warn_angles(spec.angles());
            table = cmd_amplitude(spec);
        }
        else if (xs->parsed())
        {
            if (spec.param == SweepParam::phi)
                throw UsageError("xsection cannot sweep the angle");
            table = cmd_xsection(spec);
        }
        else if (ot->parsed())
        {
            if (spec.param == SweepParam::phi)
                throw UsageError("optical-theorem cannot sweep the angle");
            OpticalTheoremSpec ots;
            bool const custom = was_given("--k") || was_given("--rc")
                                || was_given("--mu") || was_given("--rho")
                                || was_given("--sweep");
            ots.configs = custom ? spec.configs() : default_suite();
            ots.phi1 = o.phi1;
            ots.phi2 = o.phi2;
            ots.tail_tol = o.tail_tol;
            ots.inject_fault = o.inject_fault;
            warn_angles({o.phi1, o.phi2});
            auto result = cmd_optical_theorem(ots);
            table = std::move(result.table);
            code = result.exit_code;
        }
        else
        {
            if (spec.param)
                throw UsageError("wavefield takes explicit grids, not --sweep");
            std::vector<double> radii{o.config.r_c};
            if (was_given("--r-start"))
                radii = Range{o.r_start, o.r_stop, o.r_count}.values();
            else if (was_given("--r"))
                radii = {o.r};
            warn_angles(spec.phis);
            table = cmd_wavefield(o.config, radii, spec.phis);
        }

        auto const format = o.format == "json" ? OutputFormat::json
                                               : OutputFormat::csv;
        if (o.output == "-")
        {
            write_table(table, format, out);
        }
        else
        {
            std::ofstream file(o.output, std::ios::binary);
            if (!file)
                throw UsageError("cannot open output file " + o.output);
            write_table(table, format, file);
        }
        return code;
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (ComputeError const& e)
    {
        err << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
}

//---------------------------------------------------------------------------//
}  // namespace abvortex::cli
