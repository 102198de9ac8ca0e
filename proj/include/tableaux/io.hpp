#pragma once

// Text, JSON and Graphviz forms of the library's values.
//
//   sequence : "4,4,1,1"  (positive decimals, no spaces; "" is the empty sequence)
//   tableau  : one row per line, entries separated by single spaces
//   JSON     : {"rows":[[1,2,2,2],[3,3,4,5],[4],[5]],"shape":[4,4,1,1]}

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "tableaux/algorithms.hpp"
#include "tableaux/core.hpp"
#include "tableaux/enumeration.hpp"
#include "tableaux/error.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

namespace detail {

inline Part parse_positive(std::string_view token, std::string_view context) {
    if (token.empty())
        throw Error(ErrorCode::InvalidSequence, "empty entry in \"" + std::string(context) + "\"");
    if (token.front() == '-')
        throw Error(ErrorCode::InvalidSequence,
                    "negative part " + std::string(token) + " in \"" + std::string(context) + "\"");
    Part value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw Error(ErrorCode::Overflow,
                    "part " + std::string(token) + " exceeds the 64-bit range");
    if (ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::InvalidSequence, "malformed integer \"" + std::string(token) +
                                                    "\" in \"" + std::string(context) + "\"");
    if (value == 0)
        throw Error(ErrorCode::InvalidSequence,
                    "zero part in \"" + std::string(context) + "\"");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

} // namespace detail

/// Parses `INT(,INT)*` or the empty string.
inline std::vector<Part> parse_sequence(std::string_view text) {
    std::vector<Part> parts;
    if (text.empty())
        return parts;
    for (std::string_view token : detail::split(text, ','))
        parts.push_back(detail::parse_positive(token, text));
    return parts;
}

inline Partition parse_partition(std::string_view text) { return Partition(parse_sequence(text)); }

inline Composition parse_composition(std::string_view text) {
    return Composition(parse_sequence(text));
}

template <PartSequence S>
std::string format_sequence(const S& s) {
    return detail::join(s.parts());
}

// --- tableaux ---------------------------------------------------------------

inline std::string format_tableau_text(const Tableau& t) {
    std::string out;
    for (const Row& row : t.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

inline Tableau parse_tableau_text(std::string_view text) {
    std::vector<Row> rows;
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (text.empty())
        return Tableau{};
    for (std::string_view line : detail::split(text, '\n')) {
        Row row;
        for (std::string_view token : detail::split(line, ' '))
            row.push_back(detail::parse_positive(token, line));
        rows.push_back(std::move(row));
    }
    return Tableau::from_rows(std::move(rows));
}

inline nlohmann::json tableau_to_json(const Tableau& t) {
    return {{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

inline Tableau tableau_from_json(const nlohmann::json& j) {
    try {
        return Tableau(Partition(j.at("shape").get<std::vector<Part>>()),
                       j.at("rows").get<std::vector<Row>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidSequence, std::string("bad tableau JSON: ") + e.what());
    }
}

inline std::string format_tableau_json(const Tableau& t) { return tableau_to_json(t).dump(); }

inline Tableau parse_tableau_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidSequence, std::string("bad tableau JSON: ") + e.what());
    }
    return tableau_from_json(j);
}

/// Rows concatenated and joined by '|', e.g. "1224|2355|3|4".
inline std::string reading_word(const Tableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i)
            out += '|';
        for (Part v : t.rows()[i])
            out += std::to_string(v);
    }
    return out;
}

// --- posets -----------------------------------------------------------------

/// Hasse diagram; edges point from the smaller to the larger element.
inline std::string to_dot(const PosetSummary& poset) {
    std::ostringstream os;
    os << "digraph stab {\n";
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << reading_word(poset.elements[i]) << "\"];\n";
    for (const auto& [lo, hi] : poset.covers)
        os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

// --- construction traces ----------------------------------------------------

namespace detail {

template <PartSequence S>
std::string paren(const S& s) {
    return "(" + join(s.parts()) + ")";
}

/// "T(2,4)=T(4,1)=5"
inline std::string format_assignments(const std::vector<Assignment>& log, char name) {
    std::string out;
    for (std::size_t i = 0; i < log.size(); ++i) {
        if (i)
            out += '=';
        out += name;
        out += "(" + std::to_string(log[i].row) + "," + std::to_string(log[i].col) + ")";
    }
    if (!log.empty())
        out += "=" + std::to_string(log.back().value);
    return out;
}

inline std::string table_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += " | ";
        out += cells[i];
    }
    return out + '\n';
}

} // namespace detail

enum class TraceStyle {
    Strip,   // columns: nu | b | rho | <cells>
    Single,  // columns: nu | b | m | l' | h | l | <cells>
};

/// Renders a construction trace as a '|' separated table with a header row.
/// `name` is the letter used for the tableau in the assignment column.
inline std::string render_trace(const std::vector<TraceRecord>& trace, TraceStyle style,
                                char name) {
    std::string out;
    const std::string cell_header(1, name);
    if (style == TraceStyle::Strip)
        out += detail::table_row({"nu", "b", "rho", cell_header});
    else
        out += detail::table_row({"nu", "b", "m", "l'", "h", "l", cell_header});
    for (const TraceRecord& r : trace) {
        const std::string cells = detail::format_assignments(r.assignments, name);
        if (style == TraceStyle::Strip) {
            out += detail::table_row({detail::paren(r.nu), detail::paren(r.b),
                                      r.rho ? detail::paren(*r.rho) : "", cells});
        } else {
            out += detail::table_row({
                detail::paren(r.nu),
                detail::paren(r.b),
                std::to_string(r.nu.total()),
                r.l_prime ? std::to_string(*r.l_prime) : "",
                r.l ? std::to_string(r.b.height()) : "",
                r.l ? std::to_string(*r.l) : "",
                cells,
            });
        }
    }
    return out;
}

inline nlohmann::json trace_to_json(const std::vector<TraceRecord>& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const TraceRecord& r : trace) {
        nlohmann::json row = {{"step", r.step}, {"nu", r.nu.parts()}, {"b", r.b.parts()}};
        if (r.rho)
            row["rho"] = r.rho->parts();
        if (r.l)
            row["l"] = *r.l;
        if (r.l_prime)
            row["l_prime"] = *r.l_prime;
        nlohmann::json cells = nlohmann::json::array();
        for (const Assignment& c : r.assignments)
            cells.push_back({c.row, c.col, c.value});
        row["assignments"] = std::move(cells);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace tableaux
