//---------------------------------------------------------------------------//
// Copyright 2026 the abvortex developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli/table.cpp
//---------------------------------------------------------------------------//
#include "abvortex/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace abvortex::cli
{
namespace
{
//---------------------------------------------------------------------------//
std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct CsvText
{
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(std::string const& v) const { return csv_field(v); }
};

struct JsonText
{
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(double v) const
    {
        // JSON has no representation for non-finite numbers
        return std::isfinite(v) ? format_double(v) : "null";
    }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(std::string const& v) const
    {
        return nlohmann::json(v).dump();
    }
};

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

//---------------------------------------------------------------------------//
std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

//---------------------------------------------------------------------------//
void write_csv(Table const& table, std::ostream& os)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(table.columns[i]);
    os << '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << std::visit(CsvText{}, row[i]);
        os << '\n';
    }
}

//---------------------------------------------------------------------------//
void write_json(Table const& table, std::ostream& os)
{
    os << "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        os << (r ? ",\n  {" : "\n  {");
        auto const& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            os << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump()
               << ": " << std::visit(JsonText{}, row[i]);
        }
        os << "}";
    }
    os << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(Table const& table, OutputFormat format, std::ostream& os)
{
    if (format == OutputFormat::csv)
        write_csv(table, os);
    else
        write_json(table, os);
}

//---------------------------------------------------------------------------//
}  // namespace abvortex::cli
