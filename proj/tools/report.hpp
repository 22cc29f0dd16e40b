// Report emission for the CLI: one tabular result rendered as CSV, an
// aligned text table, or JSON, with a deterministic column order.
#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axi/errors.hpp"

namespace axilab {

enum class ReportFormat { csv, table, json };

inline ReportFormat report_format_from_string(const std::string& text) {
    if (text == "csv")
        return ReportFormat::csv;
    if (text == "table")
        return ReportFormat::table;
    if (text == "json")
        return ReportFormat::json;
    throw axi::ValidationError("unknown report format '" + text + "'");
}

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(const Report& report, std::ostream& out) {
    for (std::size_t i = 0; i < report.columns.size(); ++i)
        out << (i ? "," : "") << report.columns[i];
    out << "\n";
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

inline void write_table(const Report& report, std::ostream& out) {
    std::vector<std::size_t> width(report.columns.size());
    for (std::size_t i = 0; i < report.columns.size(); ++i)
        width[i] = report.columns[i].size();
    for (const auto& row : report.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());

    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "  " : "") << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size(), ' ');
        }
        out << "\n";
    };
    line(report.columns);
    std::size_t total = 0;
    for (std::size_t i = 0; i < width.size(); ++i)
        total += width[i] + (i ? 2 : 0);
    out << std::string(total, '-') << "\n";
    for (const auto& row : report.rows)
        line(row);
}

inline void write_json(const Report& report, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < report.columns.size() && i < row.size(); ++i)
            obj[report.columns[i]] = row[i];
        rows.push_back(obj);
    }
    out << rows.dump(2) << "\n";
}

/// Writes `<stem>.csv` (always) plus `<stem>.json` or a stdout table on
/// request; warns on an empty result set.
inline std::vector<std::filesystem::path> emit_report(const Report& report,
                                                      const std::filesystem::path& directory,
                                                      const std::string& stem,
                                                      ReportFormat format) {
    if (report.rows.empty())
        std::cerr << "warning: " << stem << " has no rows\n";

    std::vector<std::filesystem::path> written;
    const auto csv_path = directory / (stem + ".csv");
    std::ofstream csv(csv_path);
    if (!csv)
        throw axi::ValidationError("cannot write '" + csv_path.string() + "'");
    write_csv(report, csv);
    written.push_back(csv_path);

    if (format == ReportFormat::json) {
        const auto json_path = directory / (stem + ".json");
        std::ofstream json_out(json_path);
        if (!json_out)
            throw axi::ValidationError("cannot write '" + json_path.string() + "'");
        write_json(report, json_out);
        written.push_back(json_path);
    } else if (format == ReportFormat::table) {
        write_table(report, std::cout);
    }
    return written;
}

} // namespace axilab
