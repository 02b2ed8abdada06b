#include "output.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "nodoid/errors.hpp"

namespace nodoid::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_string(const Cell& cell, bool human) {
    return std::visit(
        [human](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, double>) {
                return human ? format4(v) : format15(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

}  // namespace

double round15(double v) {
    if (!std::isfinite(v)) return v;
    const std::string s = fmt::format("{:.15g}", v);
    return std::strtod(s.c_str(), nullptr);
}

Json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round15(v);
}

std::string format15(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.15g}", v);
}

std::string format4(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.4f}", v);
}

Json OutputRecord::to_json() const {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["diagnostics"] = diagnostics;
    return j;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw DomainError("unknown format '" + name + "' (expected json, csv or text)");
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        os << (i ? "," : "") << csv_escape(table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_escape(cell_string(row[i], false));
        }
        os << '\n';
    }
}

void write_text(std::ostream& os, const Table& table) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.header);
    for (const auto& row : table.rows) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(cell_string(c, true));
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(table.header.size(), 0);
    for (const auto& r : cells)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    for (std::size_t row = 0; row < cells.size(); ++row) {
        const auto& r = cells[row];
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << (i ? "  " : "") << fmt::format("{:>{}}", r[i], i < width.size() ? width[i] : 0);
        }
        os << '\n';
        if (row == 0) {
            std::size_t total = 0;
            for (std::size_t w : width) total += w + 2;
            os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
        }
    }
}

void write_record(std::ostream& os, const OutputRecord& record) {
    os << record.to_json().dump(2) << '\n';
}

}  // namespace nodoid::cli
