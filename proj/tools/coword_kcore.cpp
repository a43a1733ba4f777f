#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "coword/export.hpp"
#include "coword/import.hpp"
#include "coword/kcore.hpp"
#include "coword/log.hpp"
#include "coword/pipeline.hpp"
#include "coword/wos.hpp"

namespace {

coword::KeywordGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw coword::IoError("cannot open input file: " + path);
    return coword::read_pajek(in);
}

void write_core_tsv(const coword::KeywordGraph& graph, const std::vector<std::uint32_t>& cores,
                    std::ostream& out) {
    out << "id\tlabel\tcore\n";
    for (std::uint32_t v = 0; v < graph.node_count(); ++v)
        out << v + 1 << '\t' << graph.label(v) << '\t' << cores[v] << '\n';
}

void emit_core_tsv(const coword::KeywordGraph& graph, const std::vector<std::uint32_t>& cores,
                   const std::string& output_path) {
    if (output_path.empty()) {
        write_core_tsv(graph, cores, std::cout);
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw coword::IoError("cannot open output file: " + output_path);
    write_core_tsv(graph, cores, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Keyword co-occurrence networks and k-core layer reports "
                 "from Web of Science field-tagged exports"};
    app.require_subcommand(1);

    // --- run: the full pipeline -------------------------------------------
    coword::PipelineConfig cfg;
    std::string keyword_field = "author";
    std::string matrix_mode = "binary";
    std::string layer_ranges;
    std::vector<std::string> formats;

    auto* run = app.add_subcommand("run", "Run the full pipeline on an export file");
    run->set_config("-c,--config", "", "Key=value config file; command-line flags win");
    run->add_option("-i,--input", cfg.input_path, "WoS field-tagged export (.txt)")->required();
    run->add_option("-o,--output-dir", cfg.output_dir, "Directory for generated files")
        ->capture_default_str();
    run->add_option("-t,--threshold", cfg.threshold, "Minimum keyword document frequency")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    run->add_option("-k,--keyword-field", keyword_field, "author | keywords_plus")
        ->capture_default_str();
    run->add_option("-x,--exclude", cfg.exclusions,
                    "Terms dropped after normalization (exact match)")
        ->delimiter(',')
        ->capture_default_str();
    run->add_option("-m,--matrix-mode", matrix_mode, "binary | count")->capture_default_str();
    run->add_option("-f,--formats", formats, "Subset of pajek,graphml,vosviewer,dot,csv")
        ->delimiter(',');
    run->add_option("-L,--layers", layer_ranges,
                    "Explicit layer ranges, e.g. central:12-13,intermedia:9-11,"
                    "lateral:6-8,borde:0-5");
    run->add_flag("--matrix-csv", cfg.matrix_csv, "Also dump the co-occurrence matrix as CSV");
    run->callback([&] {
        cfg.keyword_field = coword::parse_keyword_field(keyword_field);
        cfg.matrix_mode = coword::parse_matrix_mode(matrix_mode);
        if (!formats.empty()) {
            cfg.formats.clear();
            for (const auto& f : formats) {
                auto parsed = coword::parse_format(f);
                if (std::find(cfg.formats.begin(), cfg.formats.end(), parsed) == cfg.formats.end())
                    cfg.formats.push_back(parsed);
            }
        }
        if (!layer_ranges.empty()) cfg.layer_spec = coword::parse_layer_ranges(layer_ranges);
        coword::run_pipeline(cfg, std::cout);
    });

    // --- summary: corpus statistics ---------------------------------------
    std::string summary_input;
    auto* summary = app.add_subcommand("summary", "Corpus statistics for an export file");
    summary->add_option("-i,--input", summary_input, "WoS field-tagged export (.txt)")->required();
    summary->callback([&] {
        const auto corpus = coword::parse_export_file(summary_input);
        const auto s = coword::corpus_summary(corpus);
        const auto label = [](const char* name) -> std::ostream& {
            return std::cout << std::left << std::setw(18) << name;
        };
        label("articles") << s.articles << '\n';
        if (s.first_year)
            label("period") << *s.first_year << '-' << *s.last_year << '\n';
        else
            label("period") << "n/a\n";
        label("annual growth") << (s.growth_pct
                                       ? coword::format_growth(*s.growth_pct) + "%"
                                       : std::string("n/a"))
                               << '\n';
        label("keywords plus") << s.distinct_keywords_plus << " distinct\n";
        label("author keywords") << s.distinct_author_keywords << " distinct\n";
    });

    // --- decompose: cores of an existing graph file ------------------------
    std::string dec_input, dec_output, dec_clu;
    auto* dec = app.add_subcommand("decompose", "k-core decomposition of a Pajek .net graph");
    dec->add_option("-i,--input", dec_input, "Pajek .net file")->required();
    dec->add_option("-o,--output", dec_output, "Write id/label/core TSV here (default stdout)");
    dec->add_option("--clu", dec_clu, "Also write a Pajek .clu partition of core numbers");
    dec->callback([&] {
        const auto graph = load_graph(dec_input);
        const auto decomp = coword::decompose(graph);
        emit_core_tsv(graph, decomp.core_number, dec_output);
        if (!dec_clu.empty()) {
            std::ofstream out(dec_clu, std::ios::binary);
            if (!out) throw coword::IoError("cannot open output file: " + dec_clu);
            coword::write_clu(decomp, out);
        }
        coword::log_info("nodes " + std::to_string(graph.node_count()) + ", edges " +
                         std::to_string(graph.edge_count()) + ", max core " +
                         std::to_string(decomp.max_core));
    });

    // --- oracle: brute-force reference for small graphs --------------------
    std::string oracle_input;
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force core numbers for graphs with at most 14 nodes");
    oracle->add_option("-i,--input", oracle_input, "Pajek .net file")->required();
    oracle->callback([&] {
        const auto graph = load_graph(oracle_input);
        emit_core_tsv(graph, coword::brute_force_core_numbers(graph), "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
