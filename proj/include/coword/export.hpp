#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "coword/graph.hpp"
#include "coword/kcore.hpp"
#include "coword/layers.hpp"

namespace coword {

namespace detail {

// Pajek has no escape syntax inside quoted labels.
inline std::string pajek_label(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        if (c == '"') c = '\'';
    return out;
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline std::string dot_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

// Pajek .net: 1-based vertex ids with quoted labels, then one "i j w" line
// per edge in (i, j) order.
inline void write_pajek(const KeywordGraph& graph, std::ostream& out) {
    out << "*Vertices " << graph.node_count() << "\n";
    for (std::uint32_t v = 0; v < graph.node_count(); ++v)
        out << v + 1 << " \"" << detail::pajek_label(graph.label(v)) << "\"\n";
    out << "*Edges\n";
    for (const auto& [edge, w] : graph.edge_weights())
        out << edge.first + 1 << ' ' << edge.second + 1 << ' ' << w << "\n";
}

// Pajek partition companion: one core number per vertex line.
inline void write_clu(const CoreDecomposition& decomp, std::ostream& out) {
    out << "*Vertices " << decomp.core_number.size() << "\n";
    for (auto core : decomp.core_number) out << core << "\n";
}

inline void write_vosviewer_network(const KeywordGraph& graph, std::ostream& out) {
    for (const auto& [edge, w] : graph.edge_weights())
        out << edge.first + 1 << '\t' << edge.second + 1 << '\t' << w << "\n";
}

// VOSviewer map file; cluster is the 1-based layer index (most central
// layer = 1) and score<Core> the core number.
inline void write_vosviewer_map(const KeywordGraph& graph, const CoreDecomposition& decomp,
                                const LayerSpec& spec, std::ostream& out) {
    const auto clusters = layer_clusters(decomp, spec);
    out << "id\tlabel\tcluster\tweight<Links>\tweight<Total link strength>\tscore<Core>\n";
    for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        out << v + 1 << '\t' << graph.label(v) << '\t' << clusters[v] << '\t' << graph.degree(v)
            << '\t' << graph.strength(v) << '\t' << decomp.core_number[v] << "\n";
    }
}

inline void write_graphml(const KeywordGraph& graph, const CoreDecomposition& decomp,
                          const LayerSpec& spec, std::ostream& out) {
    const auto clusters = layer_clusters(decomp, spec);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
        << "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
        << "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
        << "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"node\" attr.name=\"core\" attr.type=\"int\"/>\n"
        << "  <key id=\"d2\" for=\"node\" attr.name=\"layer\" attr.type=\"string\"/>\n"
        << "  <key id=\"d3\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        const auto& layer = spec.layers()[clusters[v] - 1].name;
        out << "    <node id=\"n" << v << "\">"
            << "<data key=\"d0\">" << detail::xml_escape(graph.label(v)) << "</data>"
            << "<data key=\"d1\">" << decomp.core_number[v] << "</data>"
            << "<data key=\"d2\">" << detail::xml_escape(layer) << "</data>"
            << "</node>\n";
    }
    std::size_t e = 0;
    for (const auto& [edge, w] : graph.edge_weights()) {
        out << "    <edge id=\"e" << e++ << "\" source=\"n" << edge.first << "\" target=\"n"
            << edge.second << "\"><data key=\"d3\">" << w << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

inline void write_dot(const KeywordGraph& graph, const CoreDecomposition& decomp,
                      const LayerSpec& spec, std::ostream& out) {
    const auto clusters = layer_clusters(decomp, spec);
    out << "graph coword {\n";
    for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        const auto& layer = spec.layers()[clusters[v] - 1].name;
        out << "  " << v + 1 << " [label=\"" << detail::dot_escape(graph.label(v))
            << "\" core=" << decomp.core_number[v] << " layer=\"" << detail::dot_escape(layer)
            << "\"];\n";
    }
    for (const auto& [edge, w] : graph.edge_weights())
        out << "  " << edge.first + 1 << " -- " << edge.second + 1 << " [weight=" << w << "];\n";
    out << "}\n";
}

}  // namespace coword
