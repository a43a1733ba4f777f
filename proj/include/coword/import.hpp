#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "coword/errors.hpp"
#include "coword/graph.hpp"
#include "coword/text.hpp"

namespace coword {

namespace detail {

inline bool istarts_with(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char a = s[i], b = prefix[i];
        if (a >= 'A' && a <= 'Z') a += 32;
        if (b >= 'A' && b <= 'Z') b += 32;
        if (a != b) return false;
    }
    return true;
}

template <typename T>
inline T parse_uint(std::string_view tok, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw GraphFileError(std::string("invalid ") + what + " '" + std::string(tok) + "'", line);
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace detail

// Reads a Pajek .net file (the dialect written by write_pajek, plus
// unquoted labels and *Arcs sections for tolerance).
inline KeywordGraph read_pajek(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::uint32_t n = 0;
    bool saw_vertices = false;
    std::vector<std::string> labels;
    std::vector<WeightedEdge> edges;
    enum class Section { none, vertices, edges } section = Section::none;

    while (std::getline(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (text.empty() || text.front() == '%') continue;

        if (text.front() == '*') {
            if (detail::istarts_with(text, "*vertices")) {
                auto toks = detail::split_ws(text);
                if (toks.size() < 2)
                    throw GraphFileError("*Vertices without a count", line_no);
                n = detail::parse_uint<std::uint32_t>(toks[1], line_no, "vertex count");
                labels.assign(n, {});
                for (std::uint32_t v = 0; v < n; ++v) labels[v] = "n" + std::to_string(v + 1);
                saw_vertices = true;
                section = Section::vertices;
            } else if (detail::istarts_with(text, "*edges") || detail::istarts_with(text, "*arcs")) {
                if (!saw_vertices)
                    throw GraphFileError("edge section before *Vertices", line_no);
                section = Section::edges;
            } else {
                throw GraphFileError("unsupported section '" + std::string(text) + "'", line_no);
            }
            continue;
        }

        if (section == Section::vertices) {
            auto toks = detail::split_ws(text);
            const auto id = detail::parse_uint<std::uint32_t>(toks[0], line_no, "vertex id");
            if (id < 1 || id > n) throw GraphFileError("vertex id out of range", line_no);
            auto rest = trim(text.substr(toks[0].size()));
            if (!rest.empty()) {
                if (rest.front() == '"') {
                    auto close = rest.find('"', 1);
                    if (close == std::string_view::npos)
                        throw GraphFileError("unterminated vertex label", line_no);
                    labels[id - 1] = std::string(rest.substr(1, close - 1));
                } else {
                    labels[id - 1] = std::string(detail::split_ws(rest)[0]);
                }
            }
        } else if (section == Section::edges) {
            auto toks = detail::split_ws(text);
            if (toks.size() < 2) throw GraphFileError("edge line needs two endpoints", line_no);
            const auto a = detail::parse_uint<std::uint32_t>(toks[0], line_no, "edge endpoint");
            const auto b = detail::parse_uint<std::uint32_t>(toks[1], line_no, "edge endpoint");
            if (a < 1 || a > n || b < 1 || b > n)
                throw GraphFileError("edge endpoint out of range", line_no);
            if (a == b) throw GraphFileError("self-loop is not allowed", line_no);
            std::uint32_t w = 1;
            if (toks.size() >= 3) w = detail::parse_uint<std::uint32_t>(toks[2], line_no, "edge weight");
            if (w == 0) throw GraphFileError("edge weight must be positive", line_no);
            edges.push_back({a - 1, b - 1, w});
        } else {
            throw GraphFileError("content before *Vertices", line_no);
        }
    }
    if (!saw_vertices) throw GraphFileError("missing *Vertices section", line_no == 0 ? 1 : line_no);
    return KeywordGraph(n, std::move(labels), edges);
}

// Reads a Pajek .clu partition file into per-vertex values.
inline std::vector<std::uint32_t> read_clu(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::uint32_t> values;
    bool saw_header = false;
    std::uint32_t n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (text.empty() || text.front() == '%') continue;
        if (!saw_header) {
            if (!detail::istarts_with(text, "*vertices"))
                throw GraphFileError("expected *Vertices header", line_no);
            auto toks = detail::split_ws(text);
            if (toks.size() < 2) throw GraphFileError("*Vertices without a count", line_no);
            n = detail::parse_uint<std::uint32_t>(toks[1], line_no, "vertex count");
            saw_header = true;
            continue;
        }
        values.push_back(detail::parse_uint<std::uint32_t>(text, line_no, "partition value"));
    }
    if (!saw_header) throw GraphFileError("expected *Vertices header", 1);
    if (values.size() != n)
        throw GraphFileError("partition has " + std::to_string(values.size()) +
                                 " values for " + std::to_string(n) + " vertices",
                             line_no == 0 ? 1 : line_no);
    return values;
}

}  // namespace coword
