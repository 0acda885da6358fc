// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/citation_network.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "prestige/errors.hpp"
#include "support/random_instances.hpp"
#include "support/test_util.hpp"

using namespace prestige;
using testsupport::TempDir;

namespace {

CitationNetwork fixture_network(NetworkParams params = {}) {
    std::string dir = testsupport::fixture_dir() + "/fivejournals/";
    Corpus corpus = load_corpus(CorpusPaths{dir + "journals.csv", dir + "documents.csv",
                                            dir + "references.csv", dir + "areas.csv"});
    return build_network(corpus, 2007, params);
}

CitationNetwork::Raw tiny_raw() {
    CitationNetwork::Raw raw;
    raw.journal_ids = {"a", "b", "c"};
    raw.total_refs = {10.0, 5.0, 0.0};
    raw.art_counts = {2, 1, 4};
    raw.target_year = 2007;
    raw.edges = {
        {0, 1, 2.0}, {0, 1, 1.0},  // duplicate rows merge by sum
        {1, 0, 3.0}, {0, 0, 4.0},  {1, 2, 0.0},  // zero weight disappears
    };
    return raw;
}

}  // namespace

TEST_CASE("create merges duplicates, drops zeros and sorts edges") {
    CitationNetwork net = CitationNetwork::create(tiny_raw());
    REQUIRE(net.edges().size() == 3);
    CHECK(net.edges()[0].citing == 0);
    CHECK(net.edges()[0].cited == 0);
    CHECK(net.edges()[0].weight == 4.0);
    CHECK(net.edges()[1].cited == 1);
    CHECK(net.edges()[1].weight == 3.0);
    CHECK(net.weight(0, 1) == 3.0);
    CHECK(net.weight(1, 0) == 3.0);
    CHECK(net.weight(1, 2) == 0.0);
    CHECK(net.weight(2, 0) == 0.0);
    CHECK(net.self_weight(0) == 4.0);
}

TEST_CASE("create is insensitive to input edge order") {
    CitationNetwork a = CitationNetwork::create(tiny_raw());
    CitationNetwork::Raw raw = tiny_raw();
    std::reverse(raw.edges.begin(), raw.edges.end());
    CitationNetwork b = CitationNetwork::create(std::move(raw));
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].citing == b.edges()[i].citing);
        CHECK(a.edges()[i].cited == b.edges()[i].cited);
        CHECK(a.edges()[i].weight == b.edges()[i].weight);
    }
}

TEST_CASE("in_edges gather in ascending citing order") {
    CitationNetwork::Raw raw;
    raw.journal_ids = {"a", "b", "c", "d"};
    raw.total_refs = {1.0, 1.0, 1.0, 0.0};
    raw.art_counts = {1, 1, 1, 1};
    raw.edges = {{2, 3, 1.0}, {0, 3, 1.0}, {1, 3, 1.0}};
    CitationNetwork net = CitationNetwork::create(std::move(raw));
    auto in = net.in_edges(3);
    REQUIRE(in.size() == 3);
    CHECK(in[0].citing == 0);
    CHECK(in[1].citing == 1);
    CHECK(in[2].citing == 2);
    CHECK(net.in_edges(0).empty());
}

TEST_CASE("create rejects malformed input") {
    CitationNetwork::Raw raw = tiny_raw();
    raw.journal_ids = {"b", "a", "c"};
    CHECK_THROWS_AS((void)CitationNetwork::create(std::move(raw)), Error);

    raw = tiny_raw();
    raw.edges.push_back({7, 0, 1.0});
    CHECK_THROWS_AS((void)CitationNetwork::create(std::move(raw)), Error);

    raw = tiny_raw();
    raw.edges.push_back({0, 1, -2.0});
    CHECK_THROWS_AS((void)CitationNetwork::create(std::move(raw)), Error);

    raw = tiny_raw();
    raw.total_refs = {10.0, 5.0};
    CHECK_THROWS_AS((void)CitationNetwork::create(std::move(raw)), Error);

    raw = tiny_raw();
    raw.total_refs[1] = 2.0;  // out-weight 3 exceeds the refs this journal issued
    CHECK_THROWS_AS((void)CitationNetwork::create(std::move(raw)), Error);

    CHECK_THROWS_AS((void)CitationNetwork::create(CitationNetwork::Raw{}), Error);
}

TEST_CASE("dangling ignores self-loops") {
    CitationNetwork::Raw raw;
    raw.journal_ids = {"a", "b", "c"};
    raw.total_refs = {4.0, 9.0, 0.0};
    raw.art_counts = {1, 1, 1};
    raw.edges = {{0, 0, 4.0}, {1, 0, 2.0}, {1, 1, 7.0}};
    CitationNetwork net = CitationNetwork::create(std::move(raw));
    CHECK(net.is_dangling(0));       // self-loop only
    CHECK_FALSE(net.is_dangling(1));  // has an off-diagonal edge
    CHECK(net.is_dangling(2));       // no edges at all
    CHECK(dangling_set(net) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("builds the five-journal fixture network") {
    CitationNetwork net = fixture_network();
    REQUIRE(net.size() == 5);
    CHECK(net.journal_ids() ==
          std::vector<std::string>{"jA", "jB", "jC", "jD", "jE"});
    CHECK(net.total_refs() == std::vector<double>{9.0, 7.0, 9.0, 3.0, 0.0});
    CHECK(net.art_counts() == std::vector<std::uint64_t>{3, 3, 2, 1, 2});

    CHECK(net.weight(0, 0) == 1.0);
    CHECK(net.weight(0, 1) == 4.0);
    CHECK(net.weight(0, 2) == 1.0);
    CHECK(net.weight(0, 3) == 1.0);
    CHECK(net.weight(1, 0) == 4.0);
    CHECK(net.weight(1, 1) == 1.0);
    CHECK(net.weight(1, 4) == 1.0);
    CHECK(net.weight(2, 0) == 1.0);
    CHECK(net.weight(2, 1) == 1.0);
    CHECK(net.weight(2, 2) == 6.0);
    CHECK(net.weight(3, 3) == 2.0);
    CHECK(net.edges().size() == 11);

    CHECK_FALSE(net.applied_cap().has_value());
    CHECK(dangling_set(net) == std::vector<std::size_t>{3, 4});
}

TEST_CASE("art scope can count target-year items instead of the window") {
    NetworkParams params;
    params.art_scope = NetworkParams::ArtScope::target_year;
    CitationNetwork net = fixture_network(params);
    CHECK(net.art_counts() == std::vector<std::uint64_t>{1, 1, 2, 1, 0});
}

TEST_CASE("window boundaries are half-open at the target year") {
    CorpusBuilder b;
    b.add_journal(Journal{"A", "", {}});
    b.add_journal(Journal{"B", "", {}});
    b.add_document(Document{"a1", "A", 2007, DocType::article});
    int year = 2003;
    for (const char* id : {"b03", "b04", "b05", "b06", "b07"}) {
        b.add_document(Document{id, "B", year++, DocType::article});
    }
    // 4 in-window citations (2004..2006), one too old, one same-year, 4 unresolved.
    for (const char* cited : {"b04", "b05", "b06", "b06", "b03", "b07", "x1", "x2", "x3", "x4"}) {
        b.add_reference(ReferenceEdge{"a1", cited});
    }
    CitationNetwork net = build_network(b.finalize(), 2007, NetworkParams{});
    CHECK(net.weight(0, 1) == 4.0);
    CHECK(net.total_refs()[0] == 10.0);
    CHECK(net.weight(1, 0) == 0.0);
    CHECK(net.total_refs()[1] == 0.0);
}

TEST_CASE("growing the window never removes citations") {
    std::string dir = testsupport::fixture_dir() + "/fivejournals/";
    Corpus corpus = load_corpus(CorpusPaths{dir + "journals.csv", dir + "documents.csv",
                                            dir + "references.csv", dir + "areas.csv"});
    double prev_total = -1.0;
    for (int window = 1; window <= 4; ++window) {
        NetworkParams params;
        params.window_years = window;
        CitationNetwork net = build_network(corpus, 2007, params);
        double total = 0.0;
        for (const NetworkEdge& e : net.edges()) total += e.weight;
        CHECK(total >= prev_total);
        prev_total = total;
        CHECK(net.total_refs() == std::vector<double>{9.0, 7.0, 9.0, 3.0, 0.0});
    }
}

TEST_CASE("a year without documents cannot produce a network") {
    CorpusBuilder b;
    b.add_journal(Journal{"A", "", {}});
    b.add_document(Document{"a1", "A", 2005, DocType::article});
    Corpus corpus = b.finalize();
    CHECK_THROWS_AS((void)build_network(corpus, 2007, NetworkParams{}), EmptyYearError);
}

TEST_CASE("no references at all make every journal dangling") {
    CorpusBuilder b;
    b.add_journal(Journal{"A", "", {}});
    b.add_journal(Journal{"B", "", {}});
    b.add_document(Document{"a1", "A", 2007, DocType::article});
    b.add_document(Document{"b1", "B", 2006, DocType::article});
    CitationNetwork net = build_network(b.finalize(), 2007, NetworkParams{});
    CHECK(net.edges().empty());
    CHECK(dangling_set(net) == std::vector<std::size_t>{0, 1});
    CHECK(net.total_refs() == std::vector<double>{0.0, 0.0});
}

TEST_CASE("self-citation cap limits the diagonal to a share of total refs") {
    CitationNetwork net = cap_self_citations(fixture_network(), 0.33);
    REQUIRE(net.applied_cap().has_value());
    CHECK(*net.applied_cap() == 0.33);
    CHECK(net.weight(0, 0) == 1.0);            // already under the cap
    CHECK(net.weight(2, 2) == doctest::Approx(2.97).epsilon(1e-15));  // 0.33 * 9
    CHECK(net.weight(3, 3) == doctest::Approx(0.99).epsilon(1e-15));  // 0.33 * 3
    CHECK(net.weight(0, 1) == 4.0);  // off-diagonal untouched
    CHECK(net.total_refs() == std::vector<double>{9.0, 7.0, 9.0, 3.0, 0.0});
    CHECK(dangling_set(net) == std::vector<std::size_t>{3, 4});
}

TEST_CASE("capping is idempotent") {
    CitationNetwork once = cap_self_citations(fixture_network(), 0.33);
    CitationNetwork twice = cap_self_citations(once, 0.33);
    REQUIRE(once.edges().size() == twice.edges().size());
    for (std::size_t i = 0; i < once.edges().size(); ++i) {
        CHECK(once.edges()[i].weight == twice.edges()[i].weight);
    }
}

TEST_CASE("cap of zero removes the diagonal entirely") {
    CitationNetwork net = cap_self_citations(fixture_network(), 0.0);
    for (std::size_t j = 0; j < net.size(); ++j) CHECK(net.self_weight(j) == 0.0);
    CHECK(net.weight(0, 1) == 4.0);
    // jD loses its only (self) edge; the dangling set is unchanged because
    // self-loops never counted against danglinghood.
    CHECK(dangling_set(net) == std::vector<std::size_t>{3, 4});
}

TEST_CASE("cap outside [0, 1] is rejected") {
    CitationNetwork net = fixture_network();
    CHECK_THROWS_AS((void)cap_self_citations(net, -0.1), Error);
    CHECK_THROWS_AS((void)cap_self_citations(net, 1.5), Error);
}

TEST_CASE("network params validation") {
    NetworkParams params;
    params.window_years = 0;
    CHECK_THROWS_AS(params.validate(), Error);
    params = NetworkParams{};
    params.self_cite_cap = 1.2;
    CHECK_THROWS_AS(params.validate(), Error);
    params = NetworkParams{};
    CHECK_NOTHROW(params.validate());
}

TEST_CASE("snapshot save and load round-trips bit-exactly") {
    CitationNetwork net = cap_self_citations(fixture_network(), 0.33);
    TempDir tmp;
    NetworkSnapshotPaths paths{tmp.file("edges.csv"), tmp.file("stats.csv")};
    save_network(net, paths);
    CitationNetwork loaded = load_network(paths, 2007, 3, 0.33);

    CHECK(loaded.journal_ids() == net.journal_ids());
    CHECK(loaded.total_refs() == net.total_refs());
    CHECK(loaded.art_counts() == net.art_counts());
    REQUIRE(loaded.edges().size() == net.edges().size());
    for (std::size_t i = 0; i < net.edges().size(); ++i) {
        CHECK(loaded.edges()[i].weight == net.edges()[i].weight);
    }
    CHECK(loaded.applied_cap() == net.applied_cap());

    NetworkSnapshotPaths again{tmp.file("edges2.csv"), tmp.file("stats2.csv")};
    save_network(loaded, again);
    CHECK(testsupport::read_file(paths.edges) == testsupport::read_file(again.edges));
    CHECK(testsupport::read_file(paths.stats) == testsupport::read_file(again.stats));
}

TEST_CASE("snapshot loader verifies the dangling flags against the edges") {
    TempDir tmp;
    NetworkSnapshotPaths paths{tmp.file("edges.csv"), tmp.file("stats.csv")};
    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,weight\nja,jb,2\n");
    testsupport::write_file(paths.stats,
                            "journal_id,total_refs,art_count,dangling_flag\n"
                            "ja,4,1,1\njb,0,1,1\n");
    CHECK_THROWS_AS((void)load_network(paths, 2007, 3), ParseError);
}

TEST_CASE("snapshot loader rejects edges naming unknown journals") {
    TempDir tmp;
    NetworkSnapshotPaths paths{tmp.file("edges.csv"), tmp.file("stats.csv")};
    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,weight\nja,jz,2\n");
    testsupport::write_file(paths.stats,
                            "journal_id,total_refs,art_count,dangling_flag\n"
                            "ja,4,1,0\njb,0,1,1\n");
    CHECK_THROWS_AS((void)load_network(paths, 2007, 3), ReferentialError);
}

TEST_CASE("preaggregated rows with window_flag 0 add no edge") {
    TempDir tmp;
    PreaggregatedPaths paths{tmp.file("edges.csv"), tmp.file("stats.csv")};
    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,count,window_flag\n"
                            "ja,jb,5,1\nja,jb,7,0\njb,ja,2,1\n");
    testsupport::write_file(paths.stats,
                            "journal_id,total_refs,art_count\nja,12,3\njb,2,1\n");
    CitationNetwork net = load_preaggregated(paths, 2007, 3);
    CHECK(net.weight(0, 1) == 5.0);
    CHECK(net.weight(1, 0) == 2.0);
    CHECK(net.total_refs() == std::vector<double>{12.0, 2.0});
    CHECK(net.art_counts() == std::vector<std::uint64_t>{3, 1});
    CHECK_FALSE(net.applied_cap().has_value());
}

TEST_CASE("preaggregated loader validates counts and flags") {
    TempDir tmp;
    PreaggregatedPaths paths{tmp.file("edges.csv"), tmp.file("stats.csv")};
    testsupport::write_file(paths.stats,
                            "journal_id,total_refs,art_count\nja,12,3\njb,2,1\n");

    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,count,window_flag\n"
                            "ja,jb,-1,1\n");
    CHECK_THROWS_AS((void)load_preaggregated(paths, 2007, 3), ParseError);

    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,count,window_flag\n"
                            "ja,jb,5,2\n");
    CHECK_THROWS_AS((void)load_preaggregated(paths, 2007, 3), ParseError);

    testsupport::write_file(paths.edges,
                            "citing_journal_id,cited_journal_id,count,window_flag\n"
                            "jz,jb,5,1\n");
    CHECK_THROWS_AS((void)load_preaggregated(paths, 2007, 3), ReferentialError);
}

TEST_CASE("random raw instances satisfy the create invariants") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 25; ++i) {
        testsupport::RandomNetworkOptions options;
        options.n = 1 + static_cast<std::size_t>(testsupport::pick(rng, 0, 30));
        options.dangling_fraction = testsupport::unit(rng);
        CitationNetwork net = testsupport::random_network(rng, options);
        CHECK(net.size() == options.n);
        for (std::size_t j = 0; j < net.size(); ++j) {
            double out = 0.0;
            for (const NetworkEdge& e : net.out_edges(j)) out += e.weight;
            CHECK(out <= net.total_refs()[j] * (1.0 + 1e-12) + 1e-9);
        }
    }
}
