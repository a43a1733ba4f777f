#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coword/vocabulary.hpp"
#include "coword/wos.hpp"

namespace coword {

enum class MatrixMode { binary, count };

// Sparse symmetric co-occurrence counts over vocabulary ids. Only i < j is
// stored; (j, i) is implied and the diagonal is zero.
struct CoOccurrenceMatrix {
    std::uint32_t dimension = 0;
    MatrixMode mode = MatrixMode::binary;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> entries;

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
        if (i == j) return 0;
        if (i > j) std::swap(i, j);
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

// Each record contributes every unordered pair of its retained normalized
// keywords once; counts accumulate across records, binary mode clamps to 1.
inline CoOccurrenceMatrix build_matrix(const Corpus& corpus, const Vocabulary& vocab,
                                       MatrixMode mode = MatrixMode::binary) {
    CoOccurrenceMatrix m;
    m.dimension = vocab.size();
    m.mode = mode;

    std::vector<std::uint32_t> ids;
    for (const auto& rec : corpus.records) {
        ids.clear();
        for (const auto& raw : record_keywords(rec, vocab.field())) {
            auto n = normalize_term(raw);
            if (n.empty()) continue;
            if (auto id = vocab.id_of(n)) ids.push_back(*id);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                auto& count = m.entries[{ids[a], ids[b]}];
                count = (mode == MatrixMode::binary) ? 1 : count + 1;
            }
    }
    return m;
}

namespace detail {

inline void write_csv_field(std::string_view s, std::ostream& out) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace detail

// Full square dump with term labels on both axes, for auditing.
inline void write_matrix_csv(const CoOccurrenceMatrix& m, const Vocabulary& vocab,
                             std::ostream& out) {
    out << "term";
    for (std::uint32_t j = 0; j < m.dimension; ++j) {
        out << ',';
        detail::write_csv_field(vocab.term(j), out);
    }
    out << '\n';
    for (std::uint32_t i = 0; i < m.dimension; ++i) {
        detail::write_csv_field(vocab.term(i), out);
        for (std::uint32_t j = 0; j < m.dimension; ++j) out << ',' << m.at(i, j);
        out << '\n';
    }
}

}  // namespace coword
