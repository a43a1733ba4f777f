#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <sstream>

#include "coword/layers.hpp"
#include "coword/vocabulary.hpp"
#include "support/test_support.hpp"

using namespace coword;

namespace {

std::vector<std::pair<std::string, std::pair<std::uint32_t, std::uint32_t>>> ranges_of(
    const LayerSpec& spec) {
    std::vector<std::pair<std::string, std::pair<std::uint32_t, std::uint32_t>>> out;
    for (const auto& l : spec.layers()) out.push_back({l.name, {l.k_min, l.k_max}});
    return out;
}

}  // namespace

TEST_CASE("default layer spec at max core 13") {
    const auto spec = default_layer_spec(13);
    const decltype(ranges_of(spec)) expected{
        {"central", {12, 13}},
        {"intermedia", {9, 11}},
        {"lateral", {6, 8}},
        {"borde", {0, 5}},
    };
    CHECK(ranges_of(spec) == expected);
}

TEST_CASE("default layer spec shrinks from the bottom") {
    SECTION("max core 2") {
        const auto spec = default_layer_spec(2);
        const decltype(ranges_of(spec)) expected{{"central", {1, 2}}, {"borde", {0, 0}}};
        CHECK(ranges_of(spec) == expected);
    }
    SECTION("max core 0") {
        const auto spec = default_layer_spec(0);
        const decltype(ranges_of(spec)) expected{{"borde", {0, 0}}};
        CHECK(ranges_of(spec) == expected);
    }
    SECTION("max core 8 covers everything with four layers") {
        const auto spec = default_layer_spec(8);
        const decltype(ranges_of(spec)) expected{
            {"central", {7, 8}}, {"intermedia", {4, 6}}, {"lateral", {1, 3}}, {"borde", {0, 0}}};
        CHECK(ranges_of(spec) == expected);
    }
    SECTION("max core 5 truncates the lateral range") {
        const auto spec = default_layer_spec(5);
        const decltype(ranges_of(spec)) expected{
            {"central", {4, 5}}, {"intermedia", {1, 3}}, {"borde", {0, 0}}};
        CHECK(ranges_of(spec) == expected);
    }
}

TEST_CASE("default spec always covers 0..max_core exactly once") {
    for (std::uint32_t mc = 0; mc <= 20; ++mc) {
        const auto spec = default_layer_spec(mc);
        for (std::uint32_t k = 0; k <= mc; ++k) {
            std::size_t covers = 0;
            for (const auto& l : spec.layers())
                if (k >= l.k_min && k <= l.k_max) ++covers;
            CHECK(covers == 1);
        }
    }
}

TEST_CASE("single shell graph with a single layer") {
    const auto g = testing::make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}},
                                       {"a", "b", "c"});
    const auto d = decompose(g);
    const auto report =
        assign_layers(d, g, LayerSpec::from_layers({{"core", 0, 2}}));
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].shell == 2);
    CHECK(report.rows[0].layer == "core");
    CHECK(report.rows[0].members.size() == 3);
    CHECK(report.layer_totals ==
          std::vector<std::pair<std::string, std::size_t>>{{"core", 3}});
}

TEST_CASE("uncovered occupied shell raises SpecGapError") {
    const auto g = testing::make_graph(2, {});  // two isolates, shell 0 occupied
    const auto d = decompose(g);
    try {
        assign_layers(d, g, LayerSpec::from_layers({{"all", 1, 5}}));
        FAIL("expected SpecGapError");
    } catch (const SpecGapError& e) {
        CHECK(e.k() == 0);
    }
}

TEST_CASE("uncovered empty shell is allowed") {
    const auto g = testing::make_graph(5, {{0, 1, 1},
                                           {0, 2, 1},
                                           {0, 3, 1},
                                           {1, 2, 1},
                                           {1, 3, 1},
                                           {2, 3, 1},
                                           {0, 4, 1}});
    const auto d = decompose(g);  // shells 1 and 3 occupied, 0 and 2 empty
    const auto report = assign_layers(
        d, g, LayerSpec::from_layers({{"hi", 3, 3}, {"lo", 1, 1}}));
    CHECK(report.layer_totals ==
          std::vector<std::pair<std::string, std::size_t>>{{"hi", 4}, {"lo", 1}});
}

TEST_CASE("doubly covered shell raises SpecOverlapError") {
    const auto g = testing::make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    const auto d = decompose(g);
    try {
        assign_layers(d, g, LayerSpec::from_layers({{"a", 0, 2}, {"b", 2, 3}}));
        FAIL("expected SpecOverlapError");
    } catch (const SpecOverlapError& e) {
        CHECK(e.k() == 2);
    }
}

TEST_CASE("from_layers rejects inverted ranges and orders by k_max") {
    CHECK_THROWS_AS(LayerSpec::from_layers({{"x", 3, 1}}), std::invalid_argument);
    const auto spec = LayerSpec::from_layers({{"low", 0, 1}, {"high", 4, 9}, {"mid", 2, 3}});
    CHECK(spec.layers()[0].name == "high");
    CHECK(spec.layers()[1].name == "mid");
    CHECK(spec.layers()[2].name == "low");
}

TEST_CASE("sample corpus report rows and totals") {
    const auto corpus = parse_export_file(testing::kSampleCorpusPath);
    const std::vector<std::string> exclusions{"altmetric", "altmetrics"};
    const auto vocab = build_vocabulary(corpus, 2, exclusions);
    const auto graph = build_graph(build_matrix(corpus, vocab, MatrixMode::binary), vocab);
    const auto decomp = decompose(graph);
    REQUIRE(decomp.max_core == 4);

    const auto report = assign_layers(decomp, graph, default_layer_spec(decomp.max_core));
    CHECK(report.layer_totals == std::vector<std::pair<std::string, std::size_t>>{
                                     {"central", 5}, {"intermedia", 6}, {"borde", 1}});

    REQUIRE(report.rows.size() == 4);  // occupied shells 4, 2, 1, 0
    CHECK(report.rows[0].shell == 4);
    CHECK(report.rows[1].shell == 2);
    CHECK(report.rows[2].shell == 1);
    CHECK(report.rows[3].shell == 0);
    CHECK(report.rows[0].layer == "central");
    CHECK(report.rows[3].layer == "borde");

    // members ordered by descending degree then term
    const auto terms_of = [](const LayerReportRow& row) {
        std::vector<std::string> out;
        for (const auto& m : row.members) out.push_back(m.term);
        return out;
    };
    CHECK(terms_of(report.rows[0]) ==
          std::vector<std::string>{"bibliometrics", "social media", "mendeley", "open access",
                                   "twitter"});
    CHECK(terms_of(report.rows[1]) ==
          std::vector<std::string>{"scientometrics", "altmetric attention score", "facebook",
                                   "research evaluation"});
    CHECK(terms_of(report.rows[3]) == std::vector<std::string>{"peer review"});
}

TEST_CASE("assignment depends only on core numbers") {
    std::mt19937 rng(211);
    const auto g = testing::random_gnp(rng, 20, 0.25);
    const auto d = decompose(g);
    const auto spec = default_layer_spec(d.max_core);
    const auto base = layer_clusters(d, spec);

    std::vector<WeightedEdge> reweighted;
    for (const auto& [edge, w] : g.edge_weights())
        reweighted.push_back({edge.first, edge.second, static_cast<std::uint32_t>(1 + rng() % 50)});
    std::vector<std::string> labels;
    for (std::uint32_t v = 0; v < 20; ++v) labels.push_back("renamed " + std::to_string(v));
    const auto h = testing::make_graph(20, reweighted, labels);
    CHECK(layer_clusters(decompose(h), spec) == base);
}

TEST_CASE("layer totals are invariant under relabeling") {
    std::mt19937 rng(223);
    const auto n = 18u;
    const auto g = testing::random_gnp(rng, n, 0.3);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<WeightedEdge> edges;
    for (const auto& [edge, w] : g.edge_weights())
        edges.push_back({perm[edge.first], perm[edge.second], w});
    const auto h = testing::make_graph(n, edges);

    const auto dg = decompose(g);
    const auto dh = decompose(h);
    const auto spec = default_layer_spec(std::max(dg.max_core, dh.max_core));
    CHECK(assign_layers(dg, g, spec).layer_totals == assign_layers(dh, h, spec).layer_totals);
}

TEST_CASE("layer CSV and table writers") {
    const auto g = testing::make_graph(3, {{0, 1, 1}}, {"a", "b", "c"});
    const auto d = decompose(g);
    const auto spec = LayerSpec::from_layers({{"linked", 1, 1}, {"rest", 0, 0}});
    const auto report = assign_layers(d, g, spec);

    std::ostringstream csv;
    write_layer_csv(report, csv);
    CHECK(csv.str() ==
          "shell,layer,term,degree,core_number\n"
          "1,linked,a,1,1\n"
          "1,linked,b,1,1\n"
          "0,rest,c,0,0\n");

    std::ostringstream table;
    write_layer_table(report, table);
    CHECK(table.str().find("a; b") != std::string::npos);
    CHECK(table.str().find("linked total") != std::string::npos);
}
