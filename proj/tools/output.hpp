#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

namespace nodoid::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Round to 15 significant digits so the shortest round-trip form printed by
/// the JSON writer never exceeds 15 digits. Non-finite values pass through.
double round15(double v);

/// JSON number for finite v, null otherwise.
Json number(double v);

/// Machine format: 15 significant digits; "nan"/"inf" spelled out.
std::string format15(double v);

/// Human format: 4 decimals.
std::string format4(double v);

struct OutputRecord {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Json diagnostics = Json::object();

    Json to_json() const;
};

using Cell = std::variant<std::string, double, long long, bool>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

/// RFC 4180 CSV, LF line endings, header row first.
void write_csv(std::ostream& os, const Table& table);

/// Fixed-width human-readable table.
void write_text(std::ostream& os, const Table& table);

void write_record(std::ostream& os, const OutputRecord& record);

}  // namespace nodoid::cli
