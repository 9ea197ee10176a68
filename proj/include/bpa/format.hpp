#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpa/bignat.hpp"
#include "bpa/exact.hpp"
#include "bpa/report.hpp"
#include "bpa/sequence_table.hpp"

// Output formats: the value grid in plain/csv/json, OEIS b-files, and the
// JSON shape of verification reports.

namespace bpa {

struct OutputRecord {
    SeqKind kind;
    unsigned long m = 0;
    unsigned long l = 0;
    std::string value;  // decimal
    std::string method; // formula identifier
    double elapsed_ms = 0.0;
};

inline std::string record_plain(const OutputRecord& rec) {
    std::string out(1, seq_kind_letter(rec.kind));
    out += "(" + std::to_string(rec.m) + "," + std::to_string(rec.l) + ") = " + rec.value;
    out += "  [" + rec.method + ", " + std::to_string(rec.elapsed_ms) + " ms]";
    return out;
}

namespace detail {

inline BigNat table_value(SeqKind kind, unsigned long m, unsigned long l) {
    return kind == SeqKind::r ? r_via_recurrence(m, l) : s_via_blocks(m, l);
}

} // namespace detail

// Plain grid: rows m, columns l, right-aligned cells under an m\l header.
inline std::string format_table_plain(SeqKind kind, unsigned long m_max, unsigned long l_max) {
    std::vector<std::vector<std::string>> cells(m_max + 2, std::vector<std::string>(l_max + 2));
    cells[0][0] = "m\\l";
    for (unsigned long l = 0; l <= l_max; ++l) cells[0][l + 1] = std::to_string(l);
    for (unsigned long m = 0; m <= m_max; ++m) {
        cells[m + 1][0] = std::to_string(m);
        for (unsigned long l = 0; l <= l_max; ++l)
            cells[m + 1][l + 1] = detail::table_value(kind, m, l).get_str();
    }
    std::vector<std::size_t> width(l_max + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += "  ";
            out += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out += '\n';
    }
    return out;
}

inline std::string format_table_csv(SeqKind kind, unsigned long m_max, unsigned long l_max) {
    std::string out = "m\\l";
    for (unsigned long l = 0; l <= l_max; ++l) out += "," + std::to_string(l);
    out += '\n';
    for (unsigned long m = 0; m <= m_max; ++m) {
        out += std::to_string(m);
        for (unsigned long l = 0; l <= l_max; ++l)
            out += "," + detail::table_value(kind, m, l).get_str();
        out += '\n';
    }
    return out;
}

inline std::string format_table_json(SeqKind kind, unsigned long m_max, unsigned long l_max) {
    nlohmann::json j;
    j["kind"] = std::string(1, seq_kind_letter(kind));
    j["m_max"] = m_max;
    j["l_max"] = l_max;
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned long m = 0; m <= m_max; ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned long l = 0; l <= l_max; ++l)
            row.push_back(detail::table_value(kind, m, l).get_str());
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j.dump(2) + "\n";
}

// OEIS b-file: "n a(n)" per line for n = 0..l_max, one space, no header.
inline std::string format_bfile(SeqKind kind, unsigned long m, unsigned long l_max) {
    std::string out;
    for (unsigned long n = 0; n <= l_max; ++n)
        out += std::to_string(n) + " " + detail::table_value(kind, m, n).get_str() + "\n";
    return out;
}

inline nlohmann::json report_json(const VerifyReport& report) {
    nlohmann::json j;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["range"] = c.range;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["status"] = report.all_pass() ? "pass" : "fail";
    return j;
}

inline std::string report_text(const VerifyReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += (c.pass ? "pass  " : "FAIL  ") + c.name + "  [" + c.range + "]";
        if (!c.pass) out += "  " + c.detail;
        out += '\n';
    }
    out += report.all_pass() ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

} // namespace bpa
