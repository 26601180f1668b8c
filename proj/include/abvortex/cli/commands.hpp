//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/cli/commands.hpp
//! Subcommands of the abvortex command-line tool.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../partial_waves.hpp"
#include "../vortex_config.hpp"
#include "table.hpp"

namespace abvortex::cli
{
//---------------------------------------------------------------------------//
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;
inline constexpr int exit_verification = 4;

//! Residual above which an exact identity fails verification.
inline constexpr double exact_identity_gate = 1e-8;

//! Invalid user input (exit code 2).
class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Evaluation failed for a valid parameter set (exit code 3).
class ComputeError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
enum class SweepParam
{
    k,
    r_c,
    mu,
    rho,
    phi
};

enum class Spacing
{
    linear,
    log
};

struct Range
{
    double start{};
    double stop{};
    long count{1};
    Spacing spacing{Spacing::linear};

    //! Grid points; throws UsageError for an invalid range.
    std::vector<double> values() const;
};

/*!
 * One swept parameter over a range, the others fixed.
 */
struct SweepSpec
{
    VortexConfig base;
    std::optional<SweepParam> param;
    Range range;
    std::vector<double> phis{0.0};
    double tail_tol{default_tail_tol};

    //! Configurations in row order (the base alone without a sweep)
    std::vector<VortexConfig> configs() const;
    //! Angles, replaced by the sweep range when sweeping phi
    std::vector<double> angles() const;
};

struct OpticalTheoremSpec
{
    std::vector<VortexConfig> configs;
    double phi1{0.7};
    double phi2{-1.9};
    double tail_tol{default_tail_tol};
    bool inject_fault{false};
};

struct CommandResult
{
    Table table;
    int exit_code{exit_ok};
};

//---------------------------------------------------------------------------//
// Default verification suite: k r_c in {0.5, 5, 20} x (mu, rho) pairs
std::vector<VortexConfig> default_suite();

Table cmd_amplitude(SweepSpec const& spec);
Table cmd_xsection(SweepSpec const& spec);
CommandResult cmd_optical_theorem(OpticalTheoremSpec const& spec);
Table cmd_wavefield(VortexConfig const& config,
                    std::vector<double> const& radii,
                    std::vector<double> const& phis);

// Parse arguments, run a subcommand and return the process exit code
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

//---------------------------------------------------------------------------//
}  // namespace abvortex::cli
