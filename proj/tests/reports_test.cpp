// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/reports.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "prestige/errors.hpp"
#include "support/test_util.hpp"

using namespace prestige;
using testsupport::TempDir;

namespace {

CitationNetwork small_network() {
    CitationNetwork::Raw raw;
    raw.journal_ids = {"a", "b", "c"};
    raw.total_refs = {4.0, 2.0, 0.0};
    raw.art_counts = {2, 0, 1};
    raw.target_year = 2007;
    raw.window_years = 3;
    raw.edges = {{0, 1, 3.0}, {1, 0, 2.0}};
    return CitationNetwork::create(std::move(raw));
}

}  // namespace

TEST_CASE("scores csv includes the requested columns only") {
    CitationNetwork net = small_network();
    PrestigeVector psjr = {0.5, 0.375, 0.125};
    SjrScores sjr;
    sjr.values = {0.25, std::nullopt, 0.125};
    JifScores jif;
    jif.values = {1.0, std::nullopt, 0.0};

    TempDir tmp;
    std::string path = tmp.file("scores.csv");
    write_scores_csv(path, net, &psjr, &sjr, &jif);
    CHECK(testsupport::read_file(path) ==
          "journal_id,psjr,sjr,jif3y,art,dangling_flag\n"
          "a,0.5,0.25,1,2,0\n"
          "b,0.375,,,0,0\n"
          "c,0.125,0.125,0,1,1\n");

    std::string jif_only = tmp.file("jif3y.csv");
    write_scores_csv(jif_only, net, nullptr, nullptr, &jif);
    CHECK(testsupport::read_file(jif_only) ==
          "journal_id,jif3y,art,dangling_flag\n"
          "a,1,2,0\n"
          "b,,0,0\n"
          "c,0,1,1\n");
}

TEST_CASE("scores json carries schema, params and per-journal rows") {
    CitationNetwork net = small_network();
    PrestigeParams params;
    PsjrResult result;
    result.prestige = {0.5, 0.3, 0.2};
    result.iterations_run = 12;
    result.final_delta = 5e-10;
    result.converged = true;
    SjrScores sjr;
    sjr.values = {0.25, std::nullopt, 0.2};

    ScoresDocument doc;
    doc.net = &net;
    doc.params = &params;
    doc.result = &result;
    doc.sjr = &sjr;
    std::string text = scores_json(doc);
    auto j = nlohmann::json::parse(text);
    CHECK(j["schema"] == "prestige-rank/scores/1");
    CHECK(j["iterations_run"] == 12);
    CHECK(j["converged"] == true);
    CHECK(j["params"]["d"] == 0.9);
    REQUIRE(j["journals"].size() == 3);
    CHECK(j["journals"][0]["journal_id"] == "a");
    CHECK(j["journals"][0]["psjr"] == 0.5);
    CHECK(j["journals"][1]["sjr"].is_null());
    CHECK(j["journals"][2]["dangling"] == true);
    CHECK(text.back() == '\n');

    ScoresDocument empty;
    CHECK_THROWS_AS((void)scores_json(empty), Error);
}

TEST_CASE("validation json counts and lists anomalies") {
    CorpusBuilder b;
    b.add_journal(Journal{"j1", "", {}});
    b.add_journal(Journal{"j2", "", {}});
    b.add_document(Document{"d1", "j1", 2007, DocType::article});
    b.add_reference(ReferenceEdge{"d1", "gone"});
    Corpus corpus = b.finalize();
    ValidationReport report = validate_corpus(corpus);

    auto j = nlohmann::json::parse(validation_report_json(corpus, report));
    CHECK(j["schema"] == "prestige-rank/validation/1");
    CHECK(j["journals"] == 2);
    CHECK(j["documents"] == 1);
    CHECK(j["references"] == 1);
    CHECK(j["unresolved_references"] == 1);
    CHECK(j["journals_without_documents"] == nlohmann::json::array({"j2"}));
    CHECK(j["fully_unresolved_journals"] == nlohmann::json::array({"j1"}));
    CHECK(j["reference_stats"][0]["unresolved_ratio"] == 1.0);
    CHECK(j["anomalies"] == 2);
    CHECK(j["clean"] == false);
}

TEST_CASE("comparison json and csv mirror the report") {
    ComparisonReport report;
    report.level = GroupingLevel::area;
    report.notes.push_back("group 'x' skipped: fewer than 2 journals with both metrics");
    GroupComparison g;
    g.group_code = "11";
    g.n_journals = 3;
    g.dropped = 1;
    g.spearman = -0.5;
    g.pearson = std::nullopt;
    g.sjr.mean = 0.125;
    g.sjr.sd = 0.0625;
    PowerLawFit fit;
    fit.slope = -1.25;
    fit.intercept = 0.75;
    fit.mean_squared_error = 0.0001;
    fit.points_used = 3;
    g.sjr.fit = fit;
    g.jif.mean = 2.0;
    g.jif.sd = std::nullopt;
    report.groups.push_back(g);
    report.spearman_mean = -0.5;

    auto j = nlohmann::json::parse(comparison_json(report));
    CHECK(j["schema"] == "prestige-rank/comparison/1");
    CHECK(j["grouping_level"] == "area");
    CHECK(j["summary"]["groups_reported"] == 1);
    CHECK(j["summary"]["spearman_mean"] == -0.5);
    CHECK(j["summary"]["spearman_sd"].is_null());
    CHECK(j["notes"].size() == 1);
    CHECK(j["groups"][0]["group"] == "11");
    CHECK(j["groups"][0]["pearson"].is_null());
    CHECK(j["groups"][0]["sjr"]["fit"]["slope"] == -1.25);
    CHECK(j["groups"][0]["jif3y"]["fit"].is_null());

    TempDir tmp;
    std::string path = tmp.file("comparison.csv");
    write_comparison_csv(path, report);
    CHECK(testsupport::read_file(path) ==
          "group,n_journals,dropped,spearman,pearson,sjr_mean,sjr_sd,sjr_slope,"
          "sjr_intercept,sjr_mse,jif3y_mean,jif3y_sd,jif3y_slope,jif3y_intercept,"
          "jif3y_mse\n"
          "11,3,1,-0.5,,0.125,0.0625,-1.25,0.75,0.0001,2,,,,\n");
}

TEST_CASE("topk json names both listings") {
    TopKTable table;
    table.k_requested = 2;
    table.k_effective = 1;
    table.overlap = 1;
    TopEntry e;
    e.journal_id = "a";
    e.title = "Alpha";
    e.sjr = 0.5;
    e.jif = 2.0;
    e.sjr_rank = 1;
    e.jif_rank = 1;
    table.by_sjr.push_back(e);
    table.by_jif.push_back(e);

    auto j = nlohmann::json::parse(topk_json(table));
    CHECK(j["schema"] == "prestige-rank/topk/1");
    CHECK(j["k_requested"] == 2);
    CHECK(j["k_effective"] == 1);
    CHECK(j["overlap"] == 1);
    CHECK(j["by_sjr"][0]["journal_id"] == "a");
    CHECK(j["by_sjr"][0]["jif3y_rank"] == 1);
    CHECK(j["by_jif3y"][0]["title"] == "Alpha");
}

TEST_CASE("scatter csv leaves unloggable cells empty") {
    // The ln fields are carried values, so dyadic stand-ins keep the
    // expected bytes simple.
    std::vector<ScatterRow> rows(2);
    rows[0].journal_id = "a";
    rows[0].sjr = 0.5;
    rows[0].jif = 0.0;
    rows[0].ln_sjr = -0.75;
    rows[1].journal_id = "b";
    rows[1].sjr = 2.0;
    rows[1].jif = 4.0;
    rows[1].ln_sjr = 0.75;
    rows[1].ln_jif = 1.5;

    TempDir tmp;
    std::string path = tmp.file("scatter.csv");
    write_scatter_csv(path, rows);
    CHECK(testsupport::read_file(path) ==
          "journal_id,sjr,jif3y,ln_sjr,ln_jif3y\n"
          "a,0.5,0,-0.75,\n"
          "b,2,4,0.75,1.5\n");
}

TEST_CASE("rank distribution csv blocks by metric in rank order") {
    RankedSeries sjr_series;
    sjr_series.entries.push_back(RankedEntry{"a", 4.0, 1.0});
    sjr_series.entries.push_back(RankedEntry{"b", 0.0, 2.0});
    RankedSeries jif_series;
    jif_series.entries.push_back(RankedEntry{"b", 8.0, 1.0});

    TempDir tmp;
    std::string path = tmp.file("rank_distribution.csv");
    write_rank_distribution_csv(path, {{"sjr", sjr_series}, {"jif3y", jif_series}});
    CHECK(testsupport::read_file(path) ==
          "metric,rank,journal_id,value,ln_rank,ln_value\n"
          "sjr,1,a,4,0,1.3862943611198906\n"
          "sjr,2,b,0,0.69314718055994529,\n"
          "jif3y,1,b,8,0,2.0794415416798357\n");
}

TEST_CASE("age profile csv writes one row per group and age") {
    AgeProfile profile;
    profile.target_year = 2007;
    profile.horizon = 2;
    AgeProfile::GroupRow filled;
    filled.group_code = "11";
    filled.total_refs = 4;
    filled.percent = {50.0, 25.0};
    filled.coverage = 75.0;
    AgeProfile::GroupRow empty;
    empty.group_code = "unclassified";
    empty.total_refs = 0;
    empty.percent = {std::nullopt, std::nullopt};
    profile.groups.push_back(filled);
    profile.groups.push_back(empty);

    TempDir tmp;
    std::string path = tmp.file("age_profile.csv");
    write_age_profile_csv(path, profile);
    CHECK(testsupport::read_file(path) ==
          "group_code,total_refs,coverage,age,percent\n"
          "11,4,75,1,50\n"
          "11,4,75,2,25\n"
          "unclassified,0,,1,\n"
          "unclassified,0,,2,\n");
}

TEST_CASE("manifest json embeds the config and artifact hashes") {
    RunManifest manifest;
    manifest.config.journals = "j.csv";
    manifest.config.documents = "d.csv";
    manifest.config.references = "r.csv";
    manifest.config.target_year = 2007;
    manifest.journal_count = 5;
    manifest.edge_count = 11;
    manifest.dangling_count = 2;
    manifest.iterations_run = 40;
    manifest.final_delta = 1e-10;
    manifest.converged = true;
    manifest.artifacts.push_back(ArtifactHash{"scores.csv", "cbf29ce484222325"});

    auto j = nlohmann::json::parse(manifest_json(manifest));
    CHECK(j["schema"] == "prestige-rank/manifest/1");
    CHECK(j["config"]["target_year"] == 2007);
    CHECK(j["config"]["journals"] == "j.csv");
    CHECK(j["network"]["edges"] == 11);
    CHECK(j["convergence"]["converged"] == true);
    CHECK(j["artifacts"][0]["path"] == "scores.csv");
    CHECK(j["artifacts"][0]["fnv1a64"] == "cbf29ce484222325");
}

TEST_CASE("identical inputs render byte-identical reports") {
    ComparisonReport report;
    report.level = GroupingLevel::overall;
    GroupComparison g;
    g.group_code = "overall";
    g.n_journals = 2;
    g.spearman = 1.0;
    g.pearson = 0.999;
    g.sjr.mean = 0.25;
    g.jif.mean = 2.0;
    report.groups.push_back(g);
    CHECK(comparison_json(report) == comparison_json(report));

    TempDir tmp;
    std::string p1 = tmp.file("c1.csv");
    std::string p2 = tmp.file("c2.csv");
    write_comparison_csv(p1, report);
    write_comparison_csv(p2, report);
    CHECK(testsupport::read_file(p1) == testsupport::read_file(p2));
}
