#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "matchdeck/errors.hpp"
#include "matchdeck/graph.hpp"

namespace matchdeck {

// graph6 encoding (McKay). Simple graphs, n <= 62: one byte n+63, then the
// upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
// into 6-bit groups, zero-padded, each group offset by 63.
inline std::string to_graph6(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("to_graph6: graph6 encodes simple graphs only");
    int n = g.vertex_count();
    if (n > 62) throw CapacityError("to_graph6: n = " + std::to_string(n) + " exceeds 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, bits_in_group = 0;
    auto flush = [&]() {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits_in_group = 0;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits_in_group == 6) flush();
        }
    if (bits_in_group > 0) {
        group <<= (6 - bits_in_group);
        bits_in_group = 6;
        flush();
    }
    return out;
}

inline Graph from_graph6(std::string_view text) {
    std::size_t begin = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) begin = header.size();
    std::size_t end = text.size();
    while (end > begin && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
    if (end == begin) throw ParseError("from_graph6: empty input", begin);
    unsigned char first = static_cast<unsigned char>(text[begin]);
    if (first < 63 || first > 126) throw ParseError("from_graph6: invalid byte", begin);
    if (first == 126) throw ParseError("from_graph6: long-form vertex counts not supported", begin);
    int n = first - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (end - begin - 1 != nbytes)
        throw ParseError("from_graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                             std::to_string(end - begin - 1),
                         begin + 1);
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char c = static_cast<unsigned char>(text[begin + 1 + k]);
        if (c < 63 || c > 126) throw ParseError("from_graph6: invalid byte", begin + 1 + k);
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int value = (group >> b) & 1;
            if (bit >= nbits) {
                if (value != 0) throw ParseError("from_graph6: nonzero padding", begin + 1 + k);
                continue;
            }
            if (value) {
                // invert bit index -> (i, j) in column order
                std::size_t t = bit;
                int j = 1;
                while (t >= static_cast<std::size_t>(j)) {
                    t -= static_cast<std::size_t>(j);
                    ++j;
                }
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

// Multigraph edge-list text: first line "n <count>", then one "u w" per
// line; a repeated line is a parallel edge.
inline std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.w) + "\n";
    return out;
}

inline Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0, line_no = 0;
    auto next_line = [&]() -> std::string_view {
        if (pos >= text.size()) return {};
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    };
    auto split_fields = [](std::string_view line) {
        std::vector<std::string_view> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) fields.push_back(line.substr(i, j - i));
            i = j;
        }
        return fields;
    };
    auto parse_int = [&](std::string_view field) {
        if (field.empty()) throw ParseError("parse_edge_list: empty field", line_no);
        long value = 0;
        for (char c : field) {
            if (c < '0' || c > '9')
                throw ParseError("parse_edge_list: expected a nonnegative integer, got '" +
                                     std::string(field) + "'",
                                 line_no);
            value = value * 10 + (c - '0');
            if (value > 1'000'000) throw ParseError("parse_edge_list: value too large", line_no);
        }
        return static_cast<int>(value);
    };

    std::vector<std::string_view> head;
    while (pos < text.size() || line_no == 0) {
        std::string_view line = next_line();
        head = split_fields(line);
        if (!head.empty()) break;
        if (pos >= text.size()) break;
    }
    if (head.size() != 2 || head[0] != "n")
        throw ParseError("parse_edge_list: expected header line 'n <count>'", line_no);
    Graph g(parse_int(head[1]));
    while (pos < text.size()) {
        std::string_view line = next_line();
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 2)
            throw ParseError("parse_edge_list: expected 'u w'", line_no);
        int u = parse_int(fields[0]);
        int w = parse_int(fields[1]);
        if (u == w) throw ParseError("parse_edge_list: loops are not allowed", line_no);
        if (u >= g.vertex_count() || w >= g.vertex_count())
            throw ParseError("parse_edge_list: endpoint out of range", line_no);
        g.add_edge(u, w);
    }
    return g;
}

}  // namespace matchdeck
