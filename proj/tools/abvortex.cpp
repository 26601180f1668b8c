//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex.cpp
//---------------------------------------------------------------------------//
#include <iostream>

#include "abvortex/cli/commands.hpp"

int main(int argc, char* argv[])
{
    return abvortex::cli::run(argc, argv, std::cout, std::cerr);
}
