#ifndef SEMICOMM_SG_FORMAT_HPP
#define SEMICOMM_SG_FORMAT_HPP

// Text format for Cayley tables (".sg"):
//
//   # optional comment lines
//   n <order>
//   names <label> ... <label>      (optional, exactly n labels)
//   <n rows of n 0-based indices>
//
// Row i, column j holds the index of i*j. Streams hold several records
// separated by blank lines.

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley_table.hpp"
#include "error.hpp"

namespace semicomm {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

inline bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline bool is_comment(const std::string& line) {
    auto p = line.find_first_not_of(" \t");
    return p != std::string::npos && line[p] == '#';
}

inline std::size_t parse_index(const std::string& tok, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok[0] == '-' || tok[0] == '+')
        throw SyntaxError("expected a nonnegative integer, got '" + tok + "'", line_no, 1);
    return static_cast<std::size_t>(v);
}

/// Parses one record from lines[first, last) (no blank lines inside).
inline CayleyTable parse_sg_lines(const std::vector<std::string>& lines, std::size_t first,
                                  std::size_t last, std::size_t line_offset) {
    std::size_t i = first;
    while (i < last && is_comment(lines[i]))
        ++i;
    if (i == last)
        throw SyntaxError("missing 'n <order>' line", line_offset + i + 1, 1);
    auto head = split_ws(lines[i]);
    if (head.size() != 2 || head[0] != "n")
        throw SyntaxError("expected 'n <order>'", line_offset + i + 1, 1);
    const std::size_t n = parse_index(head[1], line_offset + i + 1);
    if (n == 0)
        throw SyntaxError("order must be positive", line_offset + i + 1, 3);
    if (n > CayleyTable::max_order)
        throw ResourceError("order " + std::to_string(n) + " exceeds maximum");
    ++i;

    std::optional<std::vector<std::string>> names;
    while (i < last && is_comment(lines[i]))
        ++i;
    if (i < last) {
        auto toks = split_ws(lines[i]);
        if (!toks.empty() && toks[0] == "names") {
            if (toks.size() != n + 1)
                throw SyntaxError("expected " + std::to_string(n) + " names", line_offset + i + 1,
                                  1);
            names.emplace(toks.begin() + 1, toks.end());
            ++i;
        }
    }

    std::vector<CayleyTable::cell_type> cells;
    cells.reserve(n * n);
    std::size_t rows = 0;
    for (; i < last; ++i) {
        if (is_comment(lines[i]))
            continue;
        auto toks = split_ws(lines[i]);
        if (toks.size() != n)
            throw SyntaxError("row " + std::to_string(rows) + " must have " + std::to_string(n) +
                                  " entries",
                              line_offset + i + 1, 1);
        if (rows == n)
            throw SyntaxError("too many rows", line_offset + i + 1, 1);
        for (const auto& t : toks)
            cells.push_back(static_cast<CayleyTable::cell_type>(parse_index(t, line_offset + i + 1)));
        ++rows;
    }
    if (rows != n)
        throw SyntaxError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows),
                          line_offset + last, 1);
    return CayleyTable(n, std::move(cells), std::move(names));
}

} // namespace detail

inline CayleyTable read_sg(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!detail::is_blank(line))
            lines.push_back(line);
    return detail::parse_sg_lines(lines, 0, lines.size(), 0);
}

inline CayleyTable parse_sg(const std::string& text) {
    std::istringstream in(text);
    return read_sg(in);
}

/// Reads every blank-line separated record.
inline std::vector<CayleyTable> read_sg_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    std::vector<CayleyTable> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        while (i < lines.size() && detail::is_blank(lines[i]))
            ++i;
        std::size_t j = i;
        while (j < lines.size() && !detail::is_blank(lines[j]))
            ++j;
        if (j > i) {
            std::vector<std::string> record(lines.begin() + static_cast<std::ptrdiff_t>(i),
                                            lines.begin() + static_cast<std::ptrdiff_t>(j));
            out.push_back(detail::parse_sg_lines(record, 0, record.size(), i));
        }
        i = j;
    }
    return out;
}

inline void write_sg(std::ostream& out, const CayleyTable& s, const std::string& comment = "") {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line))
            out << "# " << line << '\n';
    }
    const std::size_t n = s.order();
    out << "n " << n << '\n';
    if (s.has_names()) {
        out << "names";
        for (const auto& name : *s.names())
            out << ' ' << name;
        out << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j)
                out << ' ';
            out << s.at(i, j);
        }
        out << '\n';
    }
}

inline std::string to_sg(const CayleyTable& s, const std::string& comment = "") {
    std::ostringstream out;
    write_sg(out, s, comment);
    return out.str();
}

} // namespace semicomm

#endif
