#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "coword/errors.hpp"
#include "coword/graph.hpp"

namespace coword {

// Full k-core decomposition of an undirected graph.
//   core_number[v]  largest k such that v belongs to a subgraph of minimum
//                   degree >= k
//   max_core        graph degeneracy
//   shells[k]       nodes with core number exactly k, ascending ids;
//                   indexable for k in [0, max_core] (empty when n == 0)
//   peel_order      removal order of the peeling process
struct CoreDecomposition {
    std::vector<std::uint32_t> core_number;
    std::uint32_t max_core = 0;
    std::vector<std::vector<std::uint32_t>> shells;
    std::vector<std::uint32_t> peel_order;
};

// Bucket peeling: repeatedly remove a node of minimum remaining degree;
// its core number is the largest degree seen so far at a removal. Ties on
// degree break to the lowest node id, which makes peel_order deterministic.
// Implemented with a lazy min-heap over (degree, id) pairs: O((n+m) log n).
inline CoreDecomposition decompose(const KeywordGraph& graph) {
    const std::uint32_t n = graph.node_count();
    CoreDecomposition d;
    d.core_number.assign(n, 0);
    if (n == 0) return d;
    d.peel_order.reserve(n);

    std::vector<std::uint32_t> deg(n);
    std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> queue;
    const auto pack = [](std::uint32_t degree, std::uint32_t v) {
        return (static_cast<std::uint64_t>(degree) << 32) | v;
    };
    for (std::uint32_t v = 0; v < n; ++v) {
        deg[v] = graph.degree(v);
        queue.push(pack(deg[v], v));
    }

    std::vector<bool> removed(n, false);
    std::uint32_t current_core = 0;
    while (!queue.empty()) {
        const auto top = queue.top();
        queue.pop();
        const auto v = static_cast<std::uint32_t>(top & 0xFFFFFFFFu);
        const auto degree = static_cast<std::uint32_t>(top >> 32);
        if (removed[v] || degree != deg[v]) continue;  // stale entry

        removed[v] = true;
        if (degree > current_core) current_core = degree;
        d.core_number[v] = current_core;
        d.peel_order.push_back(v);
        for (auto u : graph.neighbors(v)) {
            if (removed[u]) continue;
            --deg[u];
            queue.push(pack(deg[u], u));
        }
    }

    d.max_core = current_core;
    d.shells.assign(d.max_core + 1, {});
    for (std::uint32_t v = 0; v < n; ++v) d.shells[d.core_number[v]].push_back(v);
    return d;
}

// {v : core_number(v) >= k}, ascending. k = 0 yields every node.
inline std::vector<std::uint32_t> kcore_subgraph(const CoreDecomposition& decomp,
                                                 const KeywordGraph& graph, std::uint32_t k) {
    if (decomp.core_number.size() != graph.node_count())
        throw DimensionMismatchError(decomp.core_number.size(), graph.node_count());
    std::vector<std::uint32_t> nodes;
    for (std::uint32_t v = 0; v < decomp.core_number.size(); ++v)
        if (decomp.core_number[v] >= k) nodes.push_back(v);
    return nodes;
}

inline constexpr std::size_t kOracleNodeLimit = 14;

// Independent test oracle: for each k, delete nodes of degree < k until a
// fixpoint; a node's core number is the largest k it survives. Quadratic,
// intentionally shares nothing with decompose().
inline std::vector<std::uint32_t> brute_force_core_numbers(const KeywordGraph& graph) {
    const std::uint32_t n = graph.node_count();
    if (n > kOracleNodeLimit) throw OracleTooLargeError(n, kOracleNodeLimit);

    std::vector<std::uint32_t> core(n, 0);
    for (std::uint32_t k = 1; k <= n; ++k) {
        std::vector<bool> alive(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                std::uint32_t deg = 0;
                for (auto u : graph.neighbors(v))
                    if (alive[u]) ++deg;
                if (deg < k) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        bool any = false;
        for (std::uint32_t v = 0; v < n; ++v)
            if (alive[v]) {
                core[v] = k;
                any = true;
            }
        if (!any) break;
    }
    return core;
}

}  // namespace coword
