#pragma once

// Text format for digroups and skew braces:
//
//     skb1
//     <n>
//     <n rows of the star table, space separated>
//     <n rows of the circle table>
//
// Lines starting with '#' and blank lines are skipped. The unit must be
// element 0 in both tables; file input is never relabeled silently.
// serialize followed by parse is the identity, byte for byte the other way
// around as well for files this writer produced.

#include <sstream>
#include <string>
#include <vector>

#include "skb/brace.hpp"
#include "skb/ybe.hpp"

namespace skb {

namespace detail {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    // Next content line, skipping blanks and comments.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

inline std::vector<int> parse_int_line(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<int> vals;
    std::string tok;
    while (ss >> tok) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        vals.push_back(v);
    }
    return vals;
}

} // namespace detail

inline Digroup parse_brace_file(const std::string& text,
                                const Caps& caps = Caps::defaults()) {
    detail::LineReader rd(text);
    std::string line;
    if (!rd.next(line)) throw ParseError(rd.lineno + 1, "empty file");
    {
        std::istringstream ss(line);
        std::string magic, extra;
        ss >> magic;
        if (magic != "skb1" || (ss >> extra))
            throw ParseError(rd.lineno, "expected header 'skb1'");
    }
    if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing order line");
    std::vector<int> order_vals = detail::parse_int_line(line, rd.lineno);
    if (order_vals.size() != 1 || order_vals[0] < 1)
        throw ParseError(rd.lineno, "order line must hold one positive integer");
    const int n = order_vals[0];

    auto read_table = [&](const char* what) {
        Table t;
        for (int i = 0; i < n; ++i) {
            if (!rd.next(line))
                throw ParseError(rd.lineno + 1, std::string("missing row of the ") + what +
                                                " table");
            std::vector<int> row = detail::parse_int_line(line, rd.lineno);
            if (row.size() != static_cast<size_t>(n))
                throw ParseError(rd.lineno, std::string("row of the ") + what +
                                                " table needs " + std::to_string(n) +
                                                " entries");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw ParseError(rd.lineno, "entry " + std::to_string(v) +
                                                    " out of range for order " +
                                                    std::to_string(n));
            t.push_back(std::move(row));
        }
        return t;
    };
    Table star = read_table("star");
    Table circ = read_table("circle");
    if (rd.next(line)) throw ParseError(rd.lineno, "trailing content after the tables");
    return make_digroup(star, circ, caps);
}

inline std::string serialize_brace(const Digroup& d) {
    std::ostringstream out;
    out << "skb1\n" << d.order() << "\n";
    for (const FiniteGroup* g : {&d.star, &d.circ})
        for (int i = 0; i < d.order(); ++i) {
            for (int j = 0; j < d.order(); ++j) {
                if (j) out << ' ';
                out << g->op(i, j);
            }
            out << '\n';
        }
    return out.str();
}

inline std::string serialize_brace(const SkewBrace& b) { return serialize_brace(b.digroup()); }

// YBE export: same shape, first components of r then second components.
inline std::string serialize_ybe(const YbeMap& r) {
    std::ostringstream out;
    out << "ybe1\n" << r.n << "\n";
    for (const Table* t : {&r.first, &r.second})
        for (int i = 0; i < r.n; ++i) {
            for (int j = 0; j < r.n; ++j) {
                if (j) out << ' ';
                out << (*t)[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
            out << '\n';
        }
    return out.str();
}

// Comma separated element list, as the CLI takes ideals: "0,3,6".
inline std::vector<int> parse_element_csv(const std::string& text, int order) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ValidationError("empty entry in element list");
        tok = tok.substr(b, e - b + 1);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw ValidationError("bad element '" + tok + "' in element list");
        }
        if (pos != tok.size())
            throw ValidationError("bad element '" + tok + "' in element list");
        if (v < 0 || v >= order)
            throw ValidationError("element " + tok + " is outside 0.." +
                                  std::to_string(order - 1));
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty element list");
    return out;
}

inline std::string format_subset(const Subset& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.members.size(); ++i) {
        if (i) out << ',';
        out << s.members[i];
    }
    return out.str();
}

} // namespace skb
