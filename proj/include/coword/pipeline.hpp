#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coword/cooccurrence.hpp"
#include "coword/errors.hpp"
#include "coword/export.hpp"
#include "coword/graph.hpp"
#include "coword/kcore.hpp"
#include "coword/layers.hpp"
#include "coword/log.hpp"
#include "coword/vocabulary.hpp"
#include "coword/wos.hpp"

namespace coword {

enum class ExportFormat { pajek, graphml, vosviewer, dot, csv };

inline std::string_view to_string(ExportFormat f) {
    switch (f) {
        case ExportFormat::pajek: return "pajek";
        case ExportFormat::graphml: return "graphml";
        case ExportFormat::vosviewer: return "vosviewer";
        case ExportFormat::dot: return "dot";
        case ExportFormat::csv: return "csv";
    }
    return "?";
}

inline ExportFormat parse_format(std::string_view s) {
    if (s == "pajek") return ExportFormat::pajek;
    if (s == "graphml") return ExportFormat::graphml;
    if (s == "vosviewer") return ExportFormat::vosviewer;
    if (s == "dot") return ExportFormat::dot;
    if (s == "csv") return ExportFormat::csv;
    throw std::invalid_argument("unknown export format '" + std::string(s) +
                                "' (expected pajek, graphml, vosviewer, dot or csv)");
}

inline KeywordField parse_keyword_field(std::string_view s) {
    if (s == "author") return KeywordField::author;
    if (s == "keywords_plus" || s == "keywords-plus") return KeywordField::keywords_plus;
    throw std::invalid_argument("unknown keyword field '" + std::string(s) +
                                "' (expected author or keywords_plus)");
}

inline MatrixMode parse_matrix_mode(std::string_view s) {
    if (s == "binary") return MatrixMode::binary;
    if (s == "count") return MatrixMode::count;
    throw std::invalid_argument("unknown matrix mode '" + std::string(s) +
                                "' (expected binary or count)");
}

// "central:12-13,intermedia:9-11,lateral:6-8,borde:0-5"; a single value
// stands for a one-shell range.
inline LayerSpec parse_layer_ranges(std::string_view s) {
    std::vector<Layer> layers;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        auto item = trim(s.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) continue;
        const auto colon = item.rfind(':');
        if (colon == std::string_view::npos || colon == 0)
            throw std::invalid_argument("layer range '" + std::string(item) +
                                        "' is not name:min-max");
        Layer layer;
        layer.name = std::string(trim(item.substr(0, colon)));
        auto range = trim(item.substr(colon + 1));
        const auto dash = range.find('-');
        const auto parse = [&](std::string_view tok) {
            tok = trim(tok);
            std::uint32_t v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw std::invalid_argument("bad shell number '" + std::string(tok) + "' in '" +
                                            std::string(item) + "'");
            return v;
        };
        if (dash == std::string_view::npos) {
            layer.k_min = layer.k_max = parse(range);
        } else {
            layer.k_min = parse(range.substr(0, dash));
            layer.k_max = parse(range.substr(dash + 1));
        }
        layers.push_back(std::move(layer));
    }
    if (layers.empty()) throw std::invalid_argument("empty layer range list");
    return LayerSpec::from_layers(std::move(layers));
}

struct PipelineConfig {
    std::string input_path;
    KeywordField keyword_field = KeywordField::author;
    std::uint32_t threshold = 4;
    std::vector<std::string> exclusions = {"altmetric", "altmetrics"};
    MatrixMode matrix_mode = MatrixMode::binary;
    std::optional<LayerSpec> layer_spec;  // default: derived from max_core
    std::string output_dir = "coword_out";
    std::vector<ExportFormat> formats = {ExportFormat::pajek, ExportFormat::graphml,
                                         ExportFormat::vosviewer, ExportFormat::dot,
                                         ExportFormat::csv};
    bool matrix_csv = false;
};

struct PipelineResult {
    std::size_t records = 0;
    std::size_t distinct_author_keywords = 0;
    std::size_t distinct_keywords_plus = 0;
    std::optional<int> first_year;
    std::optional<int> last_year;
    std::optional<double> growth_pct;
    std::uint32_t vocabulary_size = 0;
    std::size_t edge_count = 0;
    std::uint32_t max_core = 0;
    std::vector<std::pair<std::string, std::size_t>> layer_totals;
    std::vector<std::string> written_files;
};

class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string_view stage, const std::string& what)
        : std::runtime_error("stage " + std::string(stage) + ": " + what),
          stage_(stage) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

namespace detail {

template <typename Fn>
auto run_stage(std::string_view name, Fn&& fn) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

inline std::string open_and_write(const std::filesystem::path& path, const auto& writer) {
    std::ofstream out(path, std::ios::binary);  // LF on every platform
    if (!out) throw IoError("cannot open output file: " + path.string());
    writer(out);
    out.flush();
    if (!out) throw IoError("failed writing output file: " + path.string());
    return path.filename().string();
}

}  // namespace detail

// Full run: parse -> vocabulary -> matrix -> graph -> decompose -> layers
// -> exports. Identical config and input produce byte-identical files.
inline PipelineResult run_pipeline(const PipelineConfig& config, std::ostream& summary_out) {
    if (config.formats.empty()) throw std::invalid_argument("no export formats selected");

    PipelineResult result;

    const auto corpus = detail::run_stage("ingest", [&] {
        log_debug("parsing " + config.input_path);
        return parse_export_file(config.input_path);
    });
    const auto summary = corpus_summary(corpus);
    result.records = summary.articles;
    result.distinct_author_keywords = summary.distinct_author_keywords;
    result.distinct_keywords_plus = summary.distinct_keywords_plus;
    result.first_year = summary.first_year;
    result.last_year = summary.last_year;
    result.growth_pct = summary.growth_pct;

    const auto vocab = detail::run_stage("vocabulary", [&] {
        return build_vocabulary(corpus, config.threshold, config.exclusions, config.keyword_field);
    });
    result.vocabulary_size = vocab.size();

    const auto matrix = detail::run_stage(
        "matrix", [&] { return build_matrix(corpus, vocab, config.matrix_mode); });
    const auto graph = detail::run_stage("graph", [&] { return build_graph(matrix, vocab); });
    result.edge_count = graph.edge_count();

    const auto decomp = detail::run_stage("decompose", [&] { return decompose(graph); });
    result.max_core = decomp.max_core;

    const auto spec = config.layer_spec ? *config.layer_spec : default_layer_spec(decomp.max_core);
    const auto report =
        detail::run_stage("layers", [&] { return assign_layers(decomp, graph, spec); });
    result.layer_totals = report.layer_totals;

    detail::run_stage("export", [&] {
        namespace fs = std::filesystem;
        const fs::path dir(config.output_dir);
        fs::create_directories(dir);
        auto emit = [&](const char* name, const auto& writer) {
            result.written_files.push_back(detail::open_and_write(dir / name, writer));
            log_debug("wrote " + result.written_files.back());
        };
        for (auto format : config.formats) {
            switch (format) {
                case ExportFormat::pajek:
                    emit("coword.net", [&](std::ostream& o) { write_pajek(graph, o); });
                    emit("coword.clu", [&](std::ostream& o) { write_clu(decomp, o); });
                    break;
                case ExportFormat::graphml:
                    emit("coword.graphml",
                         [&](std::ostream& o) { write_graphml(graph, decomp, spec, o); });
                    break;
                case ExportFormat::vosviewer:
                    emit("coword_vos_map.txt",
                         [&](std::ostream& o) { write_vosviewer_map(graph, decomp, spec, o); });
                    emit("coword_vos_network.txt",
                         [&](std::ostream& o) { write_vosviewer_network(graph, o); });
                    break;
                case ExportFormat::dot:
                    emit("coword.dot", [&](std::ostream& o) { write_dot(graph, decomp, spec, o); });
                    break;
                case ExportFormat::csv:
                    emit("coword_layers.csv", [&](std::ostream& o) { write_layer_csv(report, o); });
                    emit("coword_layers.txt",
                         [&](std::ostream& o) { write_layer_table(report, o); });
                    break;
            }
        }
        if (config.matrix_csv)
            emit("coword_matrix.csv", [&](std::ostream& o) { write_matrix_csv(matrix, vocab, o); });
        return 0;
    });

    const auto label = [&](const char* name) -> std::ostream& {
        return summary_out << std::left << std::setw(18) << name;
    };
    label("records") << result.records << '\n';
    label("author keywords") << result.distinct_author_keywords << " distinct\n";
    label("keywords plus") << result.distinct_keywords_plus << " distinct\n";
    if (result.first_year)
        label("period") << *result.first_year << '-' << *result.last_year << '\n';
    label("annual growth") << (result.growth_pct ? format_growth(*result.growth_pct) + "%"
                                                 : std::string("n/a"))
                           << '\n';
    label("keywords kept") << result.vocabulary_size << " (threshold " << config.threshold
                           << ")\n";
    label("edges") << result.edge_count << '\n';
    label("max core") << result.max_core << '\n';
    std::string totals;
    for (const auto& [name, count] : result.layer_totals) {
        if (!totals.empty()) totals += ", ";
        totals += name + "=" + std::to_string(count);
    }
    label("layers") << totals << '\n';
    label("files") << result.written_files.size() << " written to " << config.output_dir << '\n';
    if (result.vocabulary_size == 0)
        summary_out << "warning: no keyword reached the frequency threshold; "
                       "outputs contain no nodes\n";

    return result;
}

}  // namespace coword
