// render.cpp

#include "dkmax/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "dkmax/error.hpp"

namespace dkmax {

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* d = std::get_if<double>(&c)) return fixed_round_even(*d);
    return std::to_string(std::get<std::int64_t>(c));
}

std::string csv_field(const Cell& c) {
    if (const auto* s = std::get_if<std::string>(&c)) {
        std::string out = "\"";
        for (char ch : *s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + '"';
    }
    return cell_text(c);
}

std::string md_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "md") return Format::md;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    fail(ErrorKind::invalid_argument, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Format f) noexcept {
    switch (f) {
        case Format::md: return "md";
        case Format::csv: return "csv";
        case Format::json: return "json";
    }
    return "?";
}

std::string fixed_round_even(double x, int places) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    const double scale = std::pow(10.0, places);
    const double q = std::nearbyint(x * scale);  // default rounding mode: half to even
    const bool neg = q < 0;
    const auto mag = static_cast<std::uint64_t>(std::abs(q));
    const auto unit = static_cast<std::uint64_t>(scale);
    std::string out = (neg ? "-" : "") + std::to_string(mag / unit);
    if (places > 0) {
        std::string frac = std::to_string(mag % unit);
        frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    double y = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), y);
    return y;
}

std::string render_table(const Table& table, Format format) {
    if (table.rows.empty()) fail(ErrorKind::validation_failure, "nothing to render");
    std::ostringstream out;
    switch (format) {
        case Format::md: {
            out << '|';
            for (const auto& c : table.columns) out << ' ' << md_escape(c) << " |";
            out << "\n|";
            for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
            out << '\n';
            for (const auto& row : table.rows) {
                out << '|';
                for (const auto& c : row) out << ' ' << md_escape(cell_text(c)) << " |";
                out << '\n';
            }
            break;
        }
        case Format::csv: {
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                out << (i ? "," : "") << csv_field(table.columns[i]);
            out << "\r\n";
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
                out << "\r\n";
            }
            break;
        }
        case Format::json: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : table.rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
                    const auto& c = row[i];
                    if (const auto* s = std::get_if<std::string>(&c)) obj[table.columns[i]] = *s;
                    else if (const auto* d = std::get_if<double>(&c))
                        obj[table.columns[i]] = round_significant(*d);
                    else obj[table.columns[i]] = std::get<std::int64_t>(c);
                }
                arr.push_back(std::move(obj));
            }
            out << arr.dump() << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace dkmax
