//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file abvortex/cli/table.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace abvortex::cli
{
//---------------------------------------------------------------------------//
//! Empty cells are written as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, long, std::string>;

/*!
 * Fixed set of named columns with rows in deterministic order.
 */
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat
{
    csv,
    json
};

//---------------------------------------------------------------------------//
// Lowercase scientific notation with 17 significant digits
std::string format_double(double v);

// Header line then one line per row, LF endings, RFC 4180 quoting
void write_csv(Table const& table, std::ostream& os);

// Array of objects keyed by column name in column order
void write_json(Table const& table, std::ostream& os);

void write_table(Table const& table, OutputFormat format, std::ostream& os);

//---------------------------------------------------------------------------//
}  // namespace abvortex::cli
