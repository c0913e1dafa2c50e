// render.hpp
// Plain tables rendered as markdown, RFC 4180 CSV or a JSON array of objects.
// md/csv print floats to 4 decimals (round half to even); json keeps 12
// significant digits.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dkmax {

enum class Format { md, csv, json };

Format parse_format(std::string_view name);
std::string_view to_string(Format f) noexcept;

using Cell = std::variant<std::string, double, std::int64_t>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Throws validation-failure on an empty table.
std::string render_table(const Table& table, Format format);

// x rounded half-to-even to `places` decimals, fixed notation.
std::string fixed_round_even(double x, int places = 4);

// x rounded to 12 significant digits (exactly representable as printed).
double round_significant(double x, int digits = 12);

}  // namespace dkmax
