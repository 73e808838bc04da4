#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "sinai/excursion_counts.hpp"

namespace sinai {

inline constexpr int kReportFormatVersion = 1;

enum class OutputFormat { Csv, Json };

using Cell = std::variant<std::string, std::int64_t, double>;

// A keyed table: the first column is the row key (usually n). CSV writes a
// header line and one line per row; JSON writes
//   {"format": "sinai-table", "version": 1, "table": name,
//    "columns": [...], "rows": {key: {column: value, ...}, ...}}
// Keys keep insertion order in both encodings.
struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void write(std::ostream& out, OutputFormat format) const;
    std::string to_csv() const;
    std::string to_json() const;
};

std::string format_cell(const Cell& cell);
// Shortest decimal that round-trips the double.
std::string format_double(double value);
// "num/den"; integers still carry "/1".
std::string format_rational(const Rational& value);

ReportTable count_report(const CountTable& table, std::string name);

}  // namespace sinai
