//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace abvortex
{
//---------------------------------------------------------------------------//
//! Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Result is not representable in double precision.
class OverflowError : public std::overflow_error
{
  public:
    using std::overflow_error::overflow_error;
};

//! Asymptotic formula requested outside its stated validity regime.
class PreconditionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Iterative evaluation failed to converge or exceeded a size cap.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
}  // namespace abvortex
