#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coword/errors.hpp"
#include "coword/text.hpp"

namespace coword {

// One record of a Web of Science field-tagged export. `fields` keeps every
// tag as it appeared (one entry per source line); the keyword lists and the
// year are derived from DE, ID and PY at parse time.
struct BibRecord {
    std::size_t record_index = 0;
    std::map<std::string, std::vector<std::string>> fields;
    std::vector<std::string> author_keywords;   // DE, semicolon-split
    std::vector<std::string> keywords_plus;     // ID, semicolon-split
    std::optional<int> year;                    // PY

    friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

struct Corpus {
    std::vector<BibRecord> records;
    std::string source_description;
    // FN/VR lines seen before the first record, kept for serialization.
    std::vector<std::pair<std::string, std::string>> header;

    std::size_t record_count() const noexcept { return records.size(); }

    // source_description is provenance, not content.
    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.records == b.records && a.header == b.header;
    }
};

namespace detail {

inline bool is_field_tag(std::string_view s) {
    const auto ok = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); };
    return s.size() == 2 && ok(s[0]) && ok(s[1]);
}

// Joins a field's value lines and splits on ';', trimming each token.
inline std::vector<std::string> split_keyword_field(const std::vector<std::string>& lines) {
    std::string joined;
    for (const auto& line : lines) {
        if (!joined.empty()) joined.push_back(' ');
        joined += line;
    }
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= joined.size()) {
        auto semi = joined.find(';', start);
        if (semi == std::string::npos) semi = joined.size();
        auto tok = trim(std::string_view(joined).substr(start, semi - start));
        if (!tok.empty()) out.emplace_back(tok);
        start = semi + 1;
    }
    return out;
}

inline std::optional<int> parse_year(const std::vector<std::string>& lines) {
    if (lines.empty()) return std::nullopt;
    const auto v = trim(lines.front());
    int year = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), year);
    if (ec != std::errc{} || ptr != v.data() + v.size()) return std::nullopt;
    return year;
}

inline BibRecord finish_record(std::map<std::string, std::vector<std::string>>&& fields,
                               std::size_t index) {
    BibRecord rec;
    rec.record_index = index;
    rec.fields = std::move(fields);
    if (auto it = rec.fields.find("DE"); it != rec.fields.end())
        rec.author_keywords = split_keyword_field(it->second);
    if (auto it = rec.fields.find("ID"); it != rec.fields.end())
        rec.keywords_plus = split_keyword_field(it->second);
    if (auto it = rec.fields.find("PY"); it != rec.fields.end())
        rec.year = parse_year(it->second);
    return rec;
}

}  // namespace detail

// Parses WoS field-tagged plain text: "XX value" tag lines, 3-space
// continuation lines, ER record terminators, EF end-of-file marker.
// FN/VR lines outside a record are kept as file header entries.
inline Corpus parse_export_text(std::string_view text, std::string source_description = {}) {
    Corpus corpus;
    corpus.source_description = std::move(source_description);

    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);  // UTF-8 BOM

    std::map<std::string, std::vector<std::string>> fields;
    bool record_open = false;
    std::string last_tag;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_ef = false;

    while (pos < text.size() && !saw_ef) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (!utf8_valid(raw)) throw EncodingError("invalid UTF-8", line_no);

        // strip CR and trailing whitespace
        std::string_view line = raw;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);

        if (line.empty()) continue;

        if (line.substr(0, 3) == "   ") {
            if (!record_open || last_tag.empty())
                throw MalformedRecordError("continuation line before any field tag", line_no);
            fields[last_tag].emplace_back(line.substr(3));
            continue;
        }

        if (line.size() < 2)
            throw MalformedRecordError("field tag line shorter than two characters", line_no);
        const std::string tag(line.substr(0, 2));
        if (!detail::is_field_tag(tag))
            throw MalformedRecordError("malformed field tag '" + tag + "'", line_no);
        std::string value;
        if (line.size() > 2) {
            if (line[2] != ' ')
                throw MalformedRecordError("expected a space after field tag '" + tag + "'", line_no);
            value = std::string(line.substr(3));
        }

        if (tag == "EF") {
            if (record_open)
                throw MalformedRecordError("record not terminated by ER before EF", line_no);
            saw_ef = true;
            continue;
        }
        if (tag == "ER") {
            if (!record_open)
                throw MalformedRecordError("ER terminator without an open record", line_no);
            corpus.records.push_back(detail::finish_record(std::move(fields), corpus.records.size()));
            fields.clear();
            record_open = false;
            last_tag.clear();
            continue;
        }
        if (!record_open && (tag == "FN" || tag == "VR")) {
            corpus.header.emplace_back(tag, value);
            continue;
        }
        record_open = true;
        fields[tag].push_back(std::move(value));
        last_tag = tag;
    }

    if (record_open)
        throw MalformedRecordError("record not terminated by ER at end of input", line_no);
    return corpus;
}

inline Corpus parse_export(std::istream& in, std::string source_description = {}) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_export_text(buf.str(), std::move(source_description));
}

inline Corpus parse_export_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path.string());
    return parse_export(in, path.string());
}

// Serializes with normalized field order (sorted tags) and one continuation
// line per stored value line. Re-parsing yields an equal Corpus.
inline void write_export(const Corpus& corpus, std::ostream& out) {
    for (const auto& [tag, value] : corpus.header)
        out << tag << (value.empty() ? "" : " ") << value << "\n";
    for (const auto& rec : corpus.records) {
        for (const auto& [tag, lines] : rec.fields) {
            bool first = true;
            for (const auto& line : lines) {
                if (first)
                    out << tag << (line.empty() ? "" : " ") << line << "\n";
                else
                    out << "   " << line << "\n";
                first = false;
            }
        }
        out << "ER\n\n";
    }
    out << "EF\n";
}

struct CorpusSummary {
    std::size_t articles = 0;
    std::size_t distinct_author_keywords = 0;  // raw strings, case-folded
    std::size_t distinct_keywords_plus = 0;
    std::map<int, std::size_t> per_year;
    std::optional<int> first_year;
    std::optional<int> last_year;
    // Compound annual growth of per-year article counts, in percent.
    std::optional<double> growth_pct;
};

inline CorpusSummary corpus_summary(const Corpus& corpus) {
    CorpusSummary s;
    s.articles = corpus.record_count();
    std::set<std::string> de, kp;
    for (const auto& rec : corpus.records) {
        for (const auto& k : rec.author_keywords) de.insert(fold_case(k));
        for (const auto& k : rec.keywords_plus) kp.insert(fold_case(k));
        if (rec.year) ++s.per_year[*rec.year];
    }
    s.distinct_author_keywords = de.size();
    s.distinct_keywords_plus = kp.size();
    if (!s.per_year.empty()) {
        s.first_year = s.per_year.begin()->first;
        s.last_year = s.per_year.rbegin()->first;
        const auto span = *s.last_year - *s.first_year;
        const auto first_count = s.per_year.begin()->second;
        const auto last_count = s.per_year.rbegin()->second;
        if (span >= 1 && first_count > 0) {
            const double ratio = static_cast<double>(last_count) / static_cast<double>(first_count);
            s.growth_pct = (std::pow(ratio, 1.0 / span) - 1.0) * 100.0;
        }
    }
    return s;
}

// "10.41" style, locale-independent.
inline std::string format_growth(double pct) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", pct);
    return buf;
}

}  // namespace coword
