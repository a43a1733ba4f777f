#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coword/cooccurrence.hpp"
#include "coword/errors.hpp"
#include "coword/graph.hpp"
#include "coword/kcore.hpp"

namespace coword {

struct Layer {
    std::string name;
    std::uint32_t k_min = 0;
    std::uint32_t k_max = 0;
};

// Named fusion of adjacent shells into hierarchical layers, ordered by
// descending k_max (the first layer is the most central one).
class LayerSpec {
public:
    LayerSpec() = default;

    static LayerSpec from_layers(std::vector<Layer> layers) {
        for (const auto& l : layers)
            if (l.k_min > l.k_max)
                throw std::invalid_argument("layer '" + l.name + "' has k_min > k_max");
        std::sort(layers.begin(), layers.end(),
                  [](const Layer& a, const Layer& b) { return a.k_max > b.k_max; });
        LayerSpec spec;
        spec.layers_ = std::move(layers);
        return spec;
    }

    const std::vector<Layer>& layers() const noexcept { return layers_; }
    bool empty() const noexcept { return layers_.empty(); }

    std::optional<std::size_t> index_for(std::uint32_t k) const {
        for (std::size_t i = 0; i < layers_.size(); ++i)
            if (k >= layers_[i].k_min && k <= layers_[i].k_max) return i;
        return std::nullopt;
    }

    // Every k in [0, max_core] must be covered at most once, and every
    // occupied shell must be covered.
    void validate(const CoreDecomposition& decomp) const {
        for (std::uint32_t k = 0; k <= decomp.max_core; ++k) {
            std::size_t covers = 0;
            for (const auto& l : layers_)
                if (k >= l.k_min && k <= l.k_max) ++covers;
            if (covers > 1) throw SpecOverlapError(k);
            const bool occupied =
                k < decomp.shells.size() && !decomp.shells[k].empty();
            if (covers == 0 && occupied) throw SpecGapError(k);
        }
    }

private:
    std::vector<Layer> layers_;
};

// Four layers in the proportions used for the reference decomposition:
// the top two shell values are central, the next three intermediate, the
// next three lateral; everything below, isolates included, is the border.
// Layers left without any k value are omitted.
inline LayerSpec default_layer_spec(std::uint32_t max_core) {
    std::vector<Layer> layers;
    std::uint32_t hi = max_core;
    const std::pair<const char*, std::uint32_t> upper[] = {
        {"central", 2}, {"intermedia", 3}, {"lateral", 3}};
    for (const auto& [name, width] : upper) {
        if (hi < 1) break;
        const std::uint32_t lo = (hi > width) ? hi - width + 1 : 1;
        layers.push_back({name, lo, hi});
        hi = lo - 1;
    }
    layers.push_back({"borde", 0, hi});
    return LayerSpec::from_layers(std::move(layers));
}

struct LayerMember {
    std::uint32_t node = 0;
    std::string term;
    std::uint32_t degree = 0;
};

struct LayerReportRow {
    std::uint32_t shell = 0;           // core number k
    std::string layer;
    std::vector<LayerMember> members;  // descending degree, then term
};

struct LayerReport {
    std::vector<LayerReportRow> rows;  // occupied shells, descending k
    std::vector<std::pair<std::string, std::size_t>> layer_totals;  // spec order
    std::uint32_t max_core = 0;
};

// Groups nodes by shell and labels each shell with its layer. The layer of
// a node depends only on its core number and the spec.
inline LayerReport assign_layers(const CoreDecomposition& decomp, const KeywordGraph& graph,
                                 const LayerSpec& spec) {
    spec.validate(decomp);

    LayerReport report;
    report.max_core = decomp.max_core;
    for (const auto& layer : spec.layers()) report.layer_totals.emplace_back(layer.name, 0);

    if (decomp.core_number.empty()) return report;
    for (std::uint32_t k = decomp.max_core + 1; k-- > 0;) {
        if (k >= decomp.shells.size() || decomp.shells[k].empty()) continue;
        const auto layer_idx = *spec.index_for(k);
        LayerReportRow row;
        row.shell = k;
        row.layer = spec.layers()[layer_idx].name;
        for (auto v : decomp.shells[k]) row.members.push_back({v, graph.label(v), graph.degree(v)});
        std::sort(row.members.begin(), row.members.end(),
                  [](const LayerMember& a, const LayerMember& b) {
                      if (a.degree != b.degree) return a.degree > b.degree;
                      return a.term < b.term;
                  });
        report.layer_totals[layer_idx].second += row.members.size();
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Per-node 1-based layer index in spec order (most central layer = 1), the
// cluster id used by the map exports.
inline std::vector<std::uint32_t> layer_clusters(const CoreDecomposition& decomp,
                                                 const LayerSpec& spec) {
    spec.validate(decomp);
    std::vector<std::uint32_t> clusters(decomp.core_number.size(), 0);
    for (std::size_t v = 0; v < decomp.core_number.size(); ++v)
        clusters[v] = static_cast<std::uint32_t>(*spec.index_for(decomp.core_number[v])) + 1;
    return clusters;
}

inline void write_layer_csv(const LayerReport& report, std::ostream& out) {
    out << "shell,layer,term,degree,core_number\n";
    for (const auto& row : report.rows)
        for (const auto& m : row.members) {
            out << row.shell << ',';
            detail::write_csv_field(row.layer, out);
            out << ',';
            detail::write_csv_field(m.term, out);
            out << ',' << m.degree << ',' << row.shell << '\n';
        }
}

// Aligned text table: one row per shell with its layer and member terms.
inline void write_layer_table(const LayerReport& report, std::ostream& out) {
    std::size_t layer_width = 5;
    for (const auto& row : report.rows) layer_width = std::max(layer_width, row.layer.size());

    out << std::left << std::setw(6) << "k" << std::setw(layer_width + 2) << "layer"
        << "terms\n";
    for (const auto& row : report.rows) {
        std::string terms;
        for (const auto& m : row.members) {
            if (!terms.empty()) terms += "; ";
            terms += m.term;
        }
        out << std::left << std::setw(6) << row.shell << std::setw(layer_width + 2) << row.layer
            << terms << '\n';
    }
    out << '\n';
    for (const auto& [name, total] : report.layer_totals)
        out << std::left << std::setw(layer_width + 8) << (name + " total") << total << '\n';
}

}  // namespace coword
