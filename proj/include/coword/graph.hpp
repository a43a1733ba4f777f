#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coword/cooccurrence.hpp"
#include "coword/errors.hpp"

namespace coword {

struct WeightedEdge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t weight = 1;
};

// Simple undirected weighted graph over dense node ids. Immutable after
// construction; adjacency lists are sorted.
class KeywordGraph {
public:
    using EdgeMap = std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>;

    KeywordGraph() = default;

    KeywordGraph(std::uint32_t node_count, std::vector<std::string> labels,
                 std::span<const WeightedEdge> edges)
        : node_count_(node_count), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(node_count_);
            for (std::uint32_t v = 0; v < node_count_; ++v)
                labels_.push_back("n" + std::to_string(v + 1));
        }
        if (labels_.size() != node_count_)
            throw std::invalid_argument("label count does not match node count");
        for (const auto& e : edges) {
            auto [i, j] = std::minmax(e.a, e.b);
            if (i == j) throw std::invalid_argument("self-loop is not allowed");
            if (j >= node_count_) throw std::invalid_argument("edge endpoint out of range");
            if (e.weight == 0) throw std::invalid_argument("edge weight must be positive");
            weights_[{i, j}] += e.weight;  // duplicates accumulate
        }
        adjacency_.resize(node_count_);
        for (const auto& [edge, w] : weights_) {
            adjacency_[edge.first].push_back(edge.second);
            adjacency_[edge.second].push_back(edge.first);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    std::uint32_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return weights_.size(); }

    const std::string& label(std::uint32_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return adjacency_.at(v);
    }
    std::uint32_t degree(std::uint32_t v) const {
        return static_cast<std::uint32_t>(adjacency_.at(v).size());
    }

    // (i, j) -> weight with i < j, in lexicographic order.
    const EdgeMap& edge_weights() const noexcept { return weights_; }

    std::uint32_t weight(std::uint32_t i, std::uint32_t j) const {
        if (i > j) std::swap(i, j);
        auto it = weights_.find({i, j});
        return it == weights_.end() ? 0 : it->second;
    }

    // Sum of incident edge weights (VOSviewer "total link strength").
    std::uint64_t strength(std::uint32_t v) const {
        std::uint64_t s = 0;
        for (auto u : neighbors(v)) s += weight(v, u);
        return s;
    }

private:
    std::uint32_t node_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    EdgeMap weights_;
};

// One node per vocabulary term (isolated terms included), one undirected
// edge per nonzero matrix entry.
inline KeywordGraph build_graph(const CoOccurrenceMatrix& matrix, const Vocabulary& vocab) {
    if (matrix.dimension != vocab.size())
        throw DimensionMismatchError(matrix.dimension, vocab.size());
    std::vector<std::string> labels;
    labels.reserve(vocab.size());
    for (const auto& t : vocab.terms()) labels.push_back(t.term);
    std::vector<WeightedEdge> edges;
    edges.reserve(matrix.entries.size());
    for (const auto& [edge, count] : matrix.entries)
        edges.push_back({edge.first, edge.second, count});
    return KeywordGraph(vocab.size(), std::move(labels), edges);
}

}  // namespace coword
