#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coword/import.hpp"
#include "coword/pipeline.hpp"
#include "support/test_support.hpp"

using namespace coword;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PipelineConfig sample_config(const std::string& out_dir, std::uint32_t threshold = 2) {
    PipelineConfig cfg;
    cfg.input_path = testing::kSampleCorpusPath;
    cfg.threshold = threshold;
    cfg.output_dir = out_dir;
    return cfg;
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::path("pipeline_test_runs") / name;
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("full run on the sample corpus") {
    const auto dir = fresh_dir("full");
    std::ostringstream summary;
    const auto result = run_pipeline(sample_config(dir.string()), summary);

    CHECK(result.records == 30);
    CHECK(result.distinct_author_keywords == 20);
    CHECK(result.distinct_keywords_plus == 7);
    CHECK(result.first_year == 2017);
    CHECK(result.last_year == 2024);
    REQUIRE(result.growth_pct.has_value());
    CHECK_THAT(*result.growth_pct, Catch::Matchers::WithinAbs(10.408951, 1e-5));
    CHECK(result.vocabulary_size == 12);
    CHECK(result.edge_count == 18);
    CHECK(result.max_core == 4);
    CHECK(result.layer_totals == std::vector<std::pair<std::string, std::size_t>>{
                                     {"central", 5}, {"intermedia", 6}, {"borde", 1}});

    const std::vector<std::string> expected_files{
        "coword.net",          "coword.clu",
        "coword.graphml",      "coword_vos_map.txt",
        "coword_vos_network.txt", "coword.dot",
        "coword_layers.csv",   "coword_layers.txt",
    };
    CHECK(result.written_files == expected_files);
    for (const auto& f : expected_files) CHECK(fs::exists(dir / f));

    const auto text = summary.str();
    CHECK(text.find("records") != std::string::npos);
    CHECK(text.find("30") != std::string::npos);
    CHECK(text.find("10.41%") != std::string::npos);
}

TEST_CASE("two runs produce byte-identical files") {
    const auto dir_a = fresh_dir("det_a");
    const auto dir_b = fresh_dir("det_b");
    std::ostringstream sink_a, sink_b;
    const auto a = run_pipeline(sample_config(dir_a.string()), sink_a);
    const auto b = run_pipeline(sample_config(dir_b.string()), sink_b);
    REQUIRE(a.written_files == b.written_files);
    for (const auto& f : a.written_files) CHECK(slurp(dir_a / f) == slurp(dir_b / f));
}

TEST_CASE("exports re-parse to the in-memory graph") {
    const auto dir = fresh_dir("reparse");
    std::ostringstream sink;
    run_pipeline(sample_config(dir.string()), sink);

    const auto corpus = parse_export_file(testing::kSampleCorpusPath);
    const std::vector<std::string> exclusions{"altmetric", "altmetrics"};
    const auto vocab = build_vocabulary(corpus, 2, exclusions);
    const auto graph = build_graph(build_matrix(corpus, vocab, MatrixMode::binary), vocab);
    const auto decomp = decompose(graph);

    std::ifstream net(dir / "coword.net", std::ios::binary);
    const auto re_graph = read_pajek(net);
    CHECK(re_graph.node_count() == graph.node_count());
    CHECK(re_graph.labels() == graph.labels());
    CHECK(re_graph.edge_weights() == graph.edge_weights());

    std::ifstream clu(dir / "coword.clu", std::ios::binary);
    CHECK(read_clu(clu) == decomp.core_number);

    // network TSV edges match the graph
    std::istringstream net_tsv(slurp(dir / "coword_vos_network.txt"));
    KeywordGraph::EdgeMap vos_edges;
    std::uint32_t i, j, w;
    while (net_tsv >> i >> j >> w) vos_edges[{i - 1, j - 1}] = w;
    CHECK(vos_edges == graph.edge_weights());
}

TEST_CASE("count mode changes edge weights but not the decomposition") {
    const auto dir = fresh_dir("count_mode");
    auto cfg = sample_config(dir.string());
    cfg.matrix_mode = MatrixMode::count;
    cfg.formats = {ExportFormat::pajek};
    std::ostringstream sink;
    const auto result = run_pipeline(cfg, sink);
    CHECK(result.max_core == 4);

    std::ifstream net(dir / "coword.net", std::ios::binary);
    const auto graph = read_pajek(net);
    CHECK(graph.weight(0, 1) == 4);  // bibliometrics / social media co-occur in 4 records
    CHECK(graph.weight(1, 2) == 5);
}

TEST_CASE("formats subset writes only the requested files") {
    const auto dir = fresh_dir("subset");
    auto cfg = sample_config(dir.string());
    cfg.formats = {ExportFormat::pajek};
    std::ostringstream sink;
    const auto result = run_pipeline(cfg, sink);
    CHECK(result.written_files == std::vector<std::string>{"coword.net", "coword.clu"});
    CHECK_FALSE(fs::exists(dir / "coword.graphml"));
}

TEST_CASE("matrix csv dump is opt-in") {
    const auto dir = fresh_dir("matrix_csv");
    auto cfg = sample_config(dir.string());
    cfg.formats = {ExportFormat::csv};
    cfg.matrix_csv = true;
    std::ostringstream sink;
    const auto result = run_pipeline(cfg, sink);
    REQUIRE(fs::exists(dir / "coword_matrix.csv"));
    const auto text = slurp(dir / "coword_matrix.csv");
    CHECK(std::count(text.begin(), text.end(), '\n') == 13);  // header + 12 rows
}

TEST_CASE("threshold too high still succeeds with a warning") {
    const auto dir = fresh_dir("empty");
    std::ostringstream summary;
    const auto result = run_pipeline(sample_config(dir.string(), 99), summary);
    CHECK(result.vocabulary_size == 0);
    CHECK(result.edge_count == 0);
    CHECK(result.max_core == 0);
    CHECK(summary.str().find("warning") != std::string::npos);

    std::ifstream net(dir / "coword.net", std::ios::binary);
    CHECK(read_pajek(net).node_count() == 0);
}

TEST_CASE("missing input names the path and the stage") {
    PipelineConfig cfg;
    cfg.input_path = "does/not/exist.txt";
    std::ostringstream sink;
    try {
        run_pipeline(cfg, sink);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "ingest");
        CHECK(std::string(e.what()).find("does/not/exist.txt") != std::string::npos);
    }
}

TEST_CASE("explicit layer ranges override the default") {
    const auto dir = fresh_dir("explicit_layers");
    auto cfg = sample_config(dir.string());
    cfg.layer_spec = parse_layer_ranges("top:2-4,rest:0-1");
    cfg.formats = {ExportFormat::csv};
    std::ostringstream sink;
    const auto result = run_pipeline(cfg, sink);
    CHECK(result.layer_totals ==
          std::vector<std::pair<std::string, std::size_t>>{{"top", 9}, {"rest", 3}});
}

TEST_CASE("empty formats are rejected") {
    auto cfg = sample_config("unused");
    cfg.formats.clear();
    std::ostringstream sink;
    CHECK_THROWS_AS(run_pipeline(cfg, sink), std::invalid_argument);
}

TEST_CASE("parse_layer_ranges syntax") {
    const auto spec = parse_layer_ranges("central:12-13, intermedia:9-11,lateral:6-8,borde:0-5");
    REQUIRE(spec.layers().size() == 4);
    CHECK(spec.layers()[0].name == "central");
    CHECK(spec.layers()[0].k_min == 12);
    CHECK(spec.layers()[3].k_max == 5);

    const auto single = parse_layer_ranges("only:3");
    CHECK(single.layers()[0].k_min == 3);
    CHECK(single.layers()[0].k_max == 3);

    CHECK_THROWS_AS(parse_layer_ranges(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_layer_ranges("noseparator"), std::invalid_argument);
    CHECK_THROWS_AS(parse_layer_ranges("x:a-b"), std::invalid_argument);
}

TEST_CASE("config option parsers") {
    CHECK(parse_keyword_field("author") == KeywordField::author);
    CHECK(parse_keyword_field("keywords_plus") == KeywordField::keywords_plus);
    CHECK_THROWS_AS(parse_keyword_field("other"), std::invalid_argument);
    CHECK(parse_matrix_mode("count") == MatrixMode::count);
    CHECK_THROWS_AS(parse_matrix_mode("weird"), std::invalid_argument);
    CHECK(parse_format("vosviewer") == ExportFormat::vosviewer);
    CHECK_THROWS_AS(parse_format("xlsx"), std::invalid_argument);
}

TEST_CASE("keywords_plus field drives the whole pipeline") {
    const auto dir = fresh_dir("kp_field");
    auto cfg = sample_config(dir.string(), 1);
    cfg.keyword_field = KeywordField::keywords_plus;
    cfg.exclusions.clear();
    cfg.formats = {ExportFormat::pajek};
    std::ostringstream sink;
    const auto result = run_pipeline(cfg, sink);
    CHECK(result.vocabulary_size == 7);
}
