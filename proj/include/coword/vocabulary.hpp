#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coword/text.hpp"
#include "coword/wos.hpp"

namespace coword {

enum class KeywordField { author, keywords_plus };

inline const std::vector<std::string>& record_keywords(const BibRecord& rec, KeywordField field) {
    return field == KeywordField::author ? rec.author_keywords : rec.keywords_plus;
}

// Canonical term form: case-folded, internal whitespace collapsed, trailing
// periods stripped. An empty result marks a discardable token.
inline std::string normalize_term(std::string_view raw) {
    std::string s = fold_case(collapse_spaces(raw));
    while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
    return s;
}

struct VocabularyTerm {
    std::string term;
    std::uint32_t doc_frequency = 0;
    std::uint32_t id = 0;
};

// Retained terms in canonical id order: descending doc frequency, ties
// broken lexicographically. This order fixes node ids everywhere downstream.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<VocabularyTerm> terms, std::uint32_t threshold,
               std::vector<std::string> exclusions, KeywordField field)
        : terms_(std::move(terms)), threshold_(threshold),
          exclusions_(std::move(exclusions)), field_(field) {
        for (const auto& t : terms_) index_.emplace(t.term, t.id);
    }

    const std::vector<VocabularyTerm>& terms() const noexcept { return terms_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(terms_.size()); }
    std::uint32_t threshold() const noexcept { return threshold_; }
    const std::vector<std::string>& exclusions() const noexcept { return exclusions_; }
    KeywordField field() const noexcept { return field_; }

    const std::string& term(std::uint32_t id) const { return terms_.at(id).term; }

    std::optional<std::uint32_t> id_of(std::string_view normalized) const {
        auto it = index_.find(std::string(normalized));
        return it == index_.end() ? std::nullopt : std::optional(it->second);
    }

private:
    std::vector<VocabularyTerm> terms_;
    std::uint32_t threshold_ = 1;
    std::vector<std::string> exclusions_;
    KeywordField field_ = KeywordField::author;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// Document frequency counts a term at most once per record. Exclusion is an
// exact match on the normalized form, so compound terms containing an
// excluded word are retained.
inline Vocabulary build_vocabulary(const Corpus& corpus, std::uint32_t threshold,
                                   std::span<const std::string> exclusions,
                                   KeywordField field = KeywordField::author) {
    if (threshold < 1) throw std::invalid_argument("vocabulary threshold must be >= 1");

    std::vector<std::string> excl;
    excl.reserve(exclusions.size());
    for (const auto& e : exclusions) {
        auto n = normalize_term(e);
        if (!n.empty()) excl.push_back(std::move(n));
    }
    std::sort(excl.begin(), excl.end());
    excl.erase(std::unique(excl.begin(), excl.end()), excl.end());

    std::map<std::string, std::uint32_t> freq;
    std::vector<std::string> seen;
    for (const auto& rec : corpus.records) {
        seen.clear();
        for (const auto& raw : record_keywords(rec, field)) {
            auto n = normalize_term(raw);
            if (!n.empty()) seen.push_back(std::move(n));
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (auto& n : seen) ++freq[n];
    }

    std::vector<VocabularyTerm> kept;
    for (auto& [term, df] : freq) {
        if (df < threshold) continue;
        if (std::binary_search(excl.begin(), excl.end(), term)) continue;
        kept.push_back({term, df, 0});
    }
    std::sort(kept.begin(), kept.end(), [](const VocabularyTerm& a, const VocabularyTerm& b) {
        if (a.doc_frequency != b.doc_frequency) return a.doc_frequency > b.doc_frequency;
        return a.term < b.term;
    });
    for (std::uint32_t i = 0; i < kept.size(); ++i) kept[i].id = i;

    return Vocabulary(std::move(kept), threshold, std::move(excl), field);
}

}  // namespace coword
