#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "replay.hpp"
#include "speedup.hpp"

namespace starload {

enum class TableFormat { Csv, Markdown };

inline TableFormat parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "markdown") return TableFormat::Markdown;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv|markdown)");
}

namespace detail {

inline std::string fixed(double value, int precision) {
    if (value == 0.0) value = 0.0;  // fold negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

inline std::string join_row(const std::vector<std::string>& cells, TableFormat format) {
    std::string out;
    if (format == TableFormat::Markdown) {
        out += "|";
        for (const auto& c : cells) out += " " + c + " |";
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ",";
            out += cells[i];
        }
    }
    out += "\n";
    return out;
}

inline std::string markdown_rule(std::size_t columns) {
    std::string out = "|";
    for (std::size_t i = 0; i < columns; ++i) out += " --- |";
    out += "\n";
    return out;
}

}  // namespace detail

/// A small labeled value grid, e.g. finish times by network row and mode.
struct ValueGrid {
    std::string corner;  ///< header of the label column
    std::vector<std::string> columns;
    std::vector<std::pair<std::string, std::vector<double>>> rows;
};

/// Renders a speedup curve. CSV columns: f,1-f,f/sp,Ss
inline std::string emit_table(const SpeedupCurve& curve, TableFormat format, int precision = 3) {
    const std::vector<std::string> header{"f", "1-f", "f/sp", "Ss"};
    std::string out = detail::join_row(header, format);
    if (format == TableFormat::Markdown) out += detail::markdown_rule(header.size());
    for (const auto& row : curve.rows)
        out += detail::join_row({detail::fixed(row.f, precision),
                                 detail::fixed(row.one_minus_f, precision),
                                 detail::fixed(row.f_over_sp, precision),
                                 detail::fixed(row.s_overall, precision)},
                                format);
    return out;
}

/// Renders a labeled grid of values.
inline std::string emit_table(const ValueGrid& grid, TableFormat format, int precision = 3) {
    std::vector<std::string> header{grid.corner};
    header.insert(header.end(), grid.columns.begin(), grid.columns.end());
    std::string out = detail::join_row(header, format);
    if (format == TableFormat::Markdown) out += detail::markdown_rule(header.size());
    for (const auto& [label, values] : grid.rows) {
        std::vector<std::string> cells{label};
        for (double v : values) cells.push_back(detail::fixed(v, precision));
        out += detail::join_row(cells, format);
    }
    return out;
}

/// Renders a timeline as CSV (node,phase,start,end), sorted by start time,
/// then node, with transfers before computation. Zero-length intervals are
/// omitted.
inline std::string emit_gantt(const Timeline& timeline, int precision = 3) {
    std::vector<TimelineEntry> rows;
    rows.reserve(timeline.entries.size());
    for (const auto& e : timeline.entries)
        if (e.end > e.start) rows.push_back(e);
    std::stable_sort(rows.begin(), rows.end(), [](const TimelineEntry& a, const TimelineEntry& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.node != b.node) return a.node < b.node;
        return a.phase == Phase::Receive && b.phase == Phase::Compute;
    });
    std::string out = "node,phase,start,end\n";
    for (const auto& e : rows)
        out += e.node + "," + to_string(e.phase) + "," + detail::fixed(e.start, precision) + "," +
               detail::fixed(e.end, precision) + "\n";
    return out;
}

}  // namespace starload
