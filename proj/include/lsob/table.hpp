// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic numeric tables.  Cells are formatted at insertion time so a
// given configuration + seed always serializes byte-identically, whatever
// the scalar type behind it was.

#ifndef LSOB_TABLE_HPP
#define LSOB_TABLE_HPP

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "lsob/precision.hpp"

namespace lsob::io {

/// Scientific notation with `digits` significant digits; round-trips at the
/// working precision.
template <class R>
std::string format_number(const R& v, unsigned digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(static_cast<int>(digits) - 1) << v;
    return os.str();
}

inline std::string format_integer(long v) { return std::to_string(v); }

/// Short human-oriented form for parameter echoes (not for data cells).
inline std::string format_param(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

struct table {
    // echoed configuration, in emission order
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

/// First line `# params: k=v,...`, second line the header, then data rows.
inline std::string to_csv(const table& t) {
    std::ostringstream os;
    os << "# params: ";
    for (std::size_t i = 0; i < t.params.size(); ++i) {
        if (i) os << ",";
        os << t.params[i].first << "=" << t.params[i].second;
    }
    os << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ",";
        os << t.columns[i];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

/// {"params": {...}, "columns": [...], "rows": [[...]]} with numeric cells
/// emitted as raw literals to keep every significant digit.
inline std::string to_json(const table& t) {
    std::ostringstream os;
    os << "{\"params\":{";
    for (std::size_t i = 0; i < t.params.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(t.params[i].first) << "\":" << t.params[i].second;
    }
    os << "},\"columns\":[";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(t.columns[i]) << "\"";
    }
    os << "],\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) os << ",";
            os << t.rows[r][i];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace lsob::io

#endif
