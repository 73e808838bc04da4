#include "sinai/report_format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace sinai {

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_cell(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return format_double(std::get<double>(cell));
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted.push_back(c);
        }
    }
    return quoted + "\"";
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return *i;
    }
    const double d = std::get<double>(cell);
    if (!std::isfinite(d)) {
        return format_double(d);
    }
    return d;
}

}  // namespace

std::string ReportTable::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += (c ? "," : "") + csv_field(columns[c]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + csv_field(format_cell(row[c]));
        }
        out += '\n';
    }
    return out;
}

std::string ReportTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["format"] = "sinai-table";
    doc["version"] = kReportFormatVersion;
    doc["table"] = name;
    doc["columns"] = columns;
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
    for (const auto& row : rows) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::object();
        for (std::size_t c = 1; c < row.size() && c < columns.size(); ++c) {
            entry[columns[c]] = json_cell(row[c]);
        }
        body[format_cell(row.front())] = std::move(entry);
    }
    doc["rows"] = std::move(body);
    return doc.dump(2) + "\n";
}

void ReportTable::write(std::ostream& out, OutputFormat format) const {
    out << (format == OutputFormat::Csv ? to_csv() : to_json());
}

ReportTable count_report(const CountTable& table, std::string name) {
    ReportTable r{std::move(name), {"n", "value"}, {}};
    for (std::size_t n = 0; n < table.entries.size(); ++n) {
        r.rows.push_back({static_cast<std::int64_t>(n), table.entries[n].get_str()});
    }
    return r;
}

}  // namespace sinai
