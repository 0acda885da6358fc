// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "prestige/analytics.hpp"
#include "prestige/errors.hpp"
#include "prestige/jif.hpp"
#include "prestige/log.hpp"
#include "prestige/numeric.hpp"
#include "prestige/pipeline.hpp"
#include "prestige/psjr.hpp"
#include "prestige/reports.hpp"
#include "prestige/run_config.hpp"
#include "prestige/version.hpp"

namespace {

using namespace prestige;

struct CliOverrides {
    std::string config_path;
    std::optional<std::string> journals;
    std::optional<std::string> documents;
    std::optional<std::string> references;
    std::optional<std::string> areas;
    std::optional<std::string> preagg_edges;
    std::optional<std::string> preagg_stats;
    std::optional<std::string> output_dir;
    std::optional<std::string> grouping;
    std::optional<std::string> art_scope;
    std::optional<int> target_year;
    std::optional<int> window_years;
    std::optional<int> max_iterations;
    std::optional<int> threads;
    std::optional<int> horizon;
    std::optional<int> top_k;
    std::optional<double> self_cite_cap;
    std::optional<double> d;
    std::optional<double> e;
    std::optional<double> convergence_tol;
    std::optional<double> c;
    bool strict = false;
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "Run configuration file");
    cmd->add_option("--journals", o.journals, "journals.csv path");
    cmd->add_option("--documents", o.documents, "documents.csv path");
    cmd->add_option("--references", o.references, "references.csv path");
    cmd->add_option("--areas", o.areas, "areas.csv hierarchy path");
    cmd->add_option("--preagg-edges", o.preagg_edges, "Pre-aggregated edges.csv path");
    cmd->add_option("--preagg-stats", o.preagg_stats,
                    "Pre-aggregated journal_stats.csv path");
    cmd->add_option("--target-year", o.target_year, "Citing year under study");
    cmd->add_option("--window", o.window_years, "Citation window in years");
    cmd->add_option("--cap", o.self_cite_cap, "Self-citation cap fraction");
    cmd->add_option("--art-scope", o.art_scope,
                    "Primary-item counting scope: window or target_year");
    cmd->add_option("--d", o.d, "Citation prestige constant");
    cmd->add_option("--e", o.e, "Publication prestige constant");
    cmd->add_option("--tol", o.convergence_tol, "Convergence tolerance");
    cmd->add_option("--max-iterations", o.max_iterations, "Iteration budget");
    cmd->add_option("--c", o.c, "Scale constant applied to the final scores");
    cmd->add_option("--threads", o.threads, "Worker thread count");
    cmd->add_option("--output-dir", o.output_dir, "Artifact directory");
    cmd->add_option("--grouping", o.grouping,
                    "Comparison grouping: overall, area or specific_area");
    cmd->add_option("--horizon", o.horizon, "Age-profile horizon in years");
    cmd->add_flag("--strict", o.strict, "Treat non-convergence as an error");
}

RunConfig assemble_config(const CliOverrides& o) {
    RunConfig cfg;
    if (!o.config_path.empty()) cfg = load_run_config(o.config_path);
    if (o.journals) cfg.journals = *o.journals;
    if (o.documents) cfg.documents = *o.documents;
    if (o.references) cfg.references = *o.references;
    if (o.areas) cfg.areas = *o.areas;
    if (o.preagg_edges) cfg.preagg_edges = *o.preagg_edges;
    if (o.preagg_stats) cfg.preagg_stats = *o.preagg_stats;
    if (o.target_year) cfg.target_year = *o.target_year;
    if (o.window_years) cfg.network.window_years = *o.window_years;
    if (o.self_cite_cap) cfg.network.self_cite_cap = *o.self_cite_cap;
    if (o.art_scope) {
        if (*o.art_scope == "window") {
            cfg.network.art_scope = NetworkParams::ArtScope::window;
        } else if (*o.art_scope == "target_year") {
            cfg.network.art_scope = NetworkParams::ArtScope::target_year;
        } else {
            throw UsageError("--art-scope must be 'window' or 'target_year'");
        }
    }
    if (o.d) cfg.prestige.d = *o.d;
    if (o.e) cfg.prestige.e = *o.e;
    if (o.convergence_tol) cfg.prestige.convergence_tol = *o.convergence_tol;
    if (o.max_iterations) cfg.prestige.max_iterations = *o.max_iterations;
    if (o.c) cfg.prestige.c = *o.c;
    if (o.threads) cfg.prestige.threads = *o.threads;
    if (o.output_dir) cfg.output_dir = *o.output_dir;
    if (o.grouping) {
        auto level = parse_grouping_level(*o.grouping);
        if (!level) {
            throw UsageError("--grouping must be overall, area or specific_area");
        }
        cfg.grouping = *level;
    }
    if (o.horizon) cfg.horizon = *o.horizon;
    if (o.top_k) cfg.top_k = *o.top_k;
    if (o.strict) cfg.strict = true;
    return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.output_dir);
    return (std::filesystem::path(cfg.output_dir) / name).string();
}

struct Metrics {
    CitationNetwork uncapped;
    CitationNetwork capped;
    PsjrResult psjr;
    SjrScores sjr;
    JifScores jif;
};

Metrics compute_metrics(const RunConfig& cfg, const Corpus* corpus) {
    CitationNetwork uncapped = build_uncapped_network(cfg, corpus);
    CitationNetwork capped = cap_self_citations(uncapped, cfg.network.self_cite_cap);
    PsjrResult psjr = compute_psjr(capped, cfg.prestige);
    if (cfg.strict && !psjr.converged) {
        throw NonConvergenceError("iteration did not converge within " +
                                  std::to_string(cfg.prestige.max_iterations) +
                                  " iterations (final delta " +
                                  format_double(psjr.final_delta) + ")");
    }
    SjrScores sjr = normalize_to_sjr(psjr.prestige, capped, cfg.prestige.c);
    JifScores jif = compute_jif3y(uncapped);
    return Metrics{std::move(uncapped), std::move(capped), std::move(psjr),
                   std::move(sjr), std::move(jif)};
}

void require_document_inputs(const RunConfig& cfg) {
    if (cfg.preaggregated()) {
        throw UsageError("this command needs document-level inputs, not pre-aggregated");
    }
    if (cfg.journals.empty() || cfg.documents.empty() || cfg.references.empty()) {
        throw UsageError("journals, documents and references inputs are required");
    }
}

int cmd_ingest(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    require_document_inputs(cfg);
    Corpus corpus = load_configured_corpus(cfg);
    ValidationReport report = validate_corpus(corpus);

    write_text_file(out_path(cfg, "validation.json"),
                    validation_report_json(corpus, report));
    CorpusPaths snapshot{out_path(cfg, "corpus_journals.csv"),
                         out_path(cfg, "corpus_documents.csv"),
                         out_path(cfg, "corpus_references.csv"),
                         cfg.areas.empty() ? "" : out_path(cfg, "corpus_areas.csv")};
    save_corpus(corpus, snapshot);

    std::cout << "journals=" << corpus.journals().size()
              << " documents=" << corpus.documents().size()
              << " references=" << corpus.references().size()
              << " unresolved=" << corpus.unresolved_reference_count()
              << " anomalies=" << report.anomaly_count() << "\n";
    return 0;
}

int cmd_network(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    cfg.validate();
    CitationNetwork uncapped = build_uncapped_network(cfg, nullptr);
    CitationNetwork capped = cap_self_citations(uncapped, cfg.network.self_cite_cap);
    save_network(capped, NetworkSnapshotPaths{out_path(cfg, "network_edges.csv"),
                                              out_path(cfg, "network_stats.csv")});
    std::cout << "journals=" << capped.size() << " edges=" << capped.edges().size()
              << " dangling=" << dangling_set(capped).size() << "\n";
    return 0;
}

int cmd_sjr(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    cfg.validate();
    Metrics m = compute_metrics(cfg, nullptr);
    write_scores_csv(out_path(cfg, "sjr.csv"), m.capped, &m.psjr.prestige, &m.sjr,
                     nullptr);
    ScoresDocument doc;
    doc.net = &m.capped;
    doc.params = &cfg.prestige;
    doc.result = &m.psjr;
    doc.sjr = &m.sjr;
    write_text_file(out_path(cfg, "sjr.json"), scores_json(doc));
    std::cout << "converged=" << (m.psjr.converged ? "true" : "false")
              << " iterations=" << m.psjr.iterations_run
              << " final_delta=" << format_double(m.psjr.final_delta) << "\n";
    return 0;
}

int cmd_jif(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    cfg.validate();
    CitationNetwork uncapped = build_uncapped_network(cfg, nullptr);
    JifScores jif = compute_jif3y(uncapped);
    write_scores_csv(out_path(cfg, "jif3y.csv"), uncapped, nullptr, nullptr, &jif);
    ScoresDocument doc;
    doc.net = &uncapped;
    doc.jif = &jif;
    write_text_file(out_path(cfg, "jif3y.json"), scores_json(doc));
    std::size_t defined = 0;
    for (const auto& v : jif.values) {
        if (v) ++defined;
    }
    std::cout << "journals=" << uncapped.size() << " defined=" << defined << "\n";
    return 0;
}

int cmd_compare(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    cfg.validate();
    std::optional<Corpus> corpus;
    if (!cfg.preaggregated()) corpus = load_configured_corpus(cfg);
    Metrics m = compute_metrics(cfg, corpus ? &*corpus : nullptr);

    ComparisonReport report =
        compare_metrics(m.capped.journal_ids(), m.sjr, m.jif,
                        corpus ? &*corpus : nullptr, cfg.grouping);
    write_text_file(out_path(cfg, "comparison.json"), comparison_json(report));
    write_comparison_csv(out_path(cfg, "comparison.csv"), report);
    write_scatter_csv(out_path(cfg, "scatter.csv"),
                      scatter_export(m.capped.journal_ids(), m.sjr, m.jif));
    std::vector<std::pair<std::string, RankedSeries>> distributions;
    distributions.emplace_back(
        "sjr", rank_values(m.capped.journal_ids(), m.sjr.values, TiePolicy::competition));
    distributions.emplace_back(
        "jif3y",
        rank_values(m.capped.journal_ids(), m.jif.values, TiePolicy::competition));
    write_rank_distribution_csv(out_path(cfg, "rank_distribution.csv"), distributions);

    std::cout << "groups=" << report.groups.size()
              << " skipped=" << report.notes.size();
    if (report.spearman_mean) {
        std::cout << " spearman_mean=" << format_double(*report.spearman_mean);
    }
    if (report.pearson_mean) {
        std::cout << " pearson_mean=" << format_double(*report.pearson_mean);
    }
    std::cout << "\n";
    return 0;
}

void print_listing(const std::string& heading, const std::vector<TopEntry>& entries) {
    std::cout << heading << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const TopEntry& e = entries[i];
        std::cout << "  " << (i + 1) << ". " << e.journal_id;
        if (!e.title.empty()) std::cout << " (" << e.title << ")";
        std::cout << " sjr=" << format_double(e.sjr) << " rank_sjr=" << e.sjr_rank
                  << " jif3y=" << format_double(e.jif) << " rank_jif3y=" << e.jif_rank
                  << "\n";
    }
}

int cmd_top(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    cfg.validate();
    std::optional<Corpus> corpus;
    if (!cfg.preaggregated()) corpus = load_configured_corpus(cfg);
    Metrics m = compute_metrics(cfg, corpus ? &*corpus : nullptr);

    std::vector<std::string> titles(m.capped.size());
    if (corpus) {
        for (std::size_t i = 0; i < m.capped.size(); ++i) {
            if (auto idx = corpus->journal_index(m.capped.journal_ids()[i])) {
                titles[i] = corpus->journals()[*idx].title;
            }
        }
    }
    TopKTable table = top_k_table(m.capped.journal_ids(), titles, m.sjr, m.jif,
                                  static_cast<std::size_t>(cfg.top_k));
    write_text_file(out_path(cfg, "topk.json"), topk_json(table));
    print_listing("top " + std::to_string(table.k_effective) + " by sjr:", table.by_sjr);
    print_listing("top " + std::to_string(table.k_effective) + " by jif3y:",
                  table.by_jif);
    std::cout << "overlap=" << table.overlap << "\n";
    return 0;
}

int cmd_age_profile(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    require_document_inputs(cfg);
    if (cfg.target_year < 1 || cfg.target_year > 9999) {
        throw UsageError("target_year must be a 4-digit calendar year");
    }
    Corpus corpus = load_configured_corpus(cfg);
    AgeProfile profile =
        reference_age_profile(corpus, cfg.target_year, cfg.horizon, cfg.grouping);
    write_age_profile_csv(out_path(cfg, "age_profile.csv"), profile);
    std::cout << "groups=" << profile.groups.size() << " horizon=" << profile.horizon
              << "\n";
    return 0;
}

int cmd_run(const CliOverrides& o) {
    RunConfig cfg = assemble_config(o);
    PipelineOutcome outcome = run_pipeline(cfg);
    std::cout << "converged=" << (outcome.converged ? "true" : "false")
              << " iterations=" << outcome.iterations_run
              << " final_delta=" << format_double(outcome.final_delta)
              << " journals=" << outcome.journal_count
              << " artifacts=" << outcome.artifacts.size() << " output_dir="
              << outcome.output_dir << "\n";
    return 0;
}

std::string json_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

int report_error(const Error& e) {
    std::string stage;
    if (const auto* staged = dynamic_cast<const StagedError*>(&e)) {
        stage = staged->stage();
    }
    std::cerr << "{\"error\":{\"message\":\"" << json_escape(e.what()) << "\"";
    if (!stage.empty()) std::cerr << ",\"stage\":\"" << json_escape(stage) << "\"";
    std::cerr << ",\"exit_code\":" << e.exit_code() << "}}\n";
    return e.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Journal prestige scores over windowed citation networks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    CliOverrides o;
    CLI::App* ingest = app.add_subcommand("ingest", "Validate and snapshot the corpus");
    add_common_options(ingest, o);
    CLI::App* network =
        app.add_subcommand("network", "Build and export the capped citation network");
    add_common_options(network, o);
    CLI::App* sjr = app.add_subcommand("sjr", "Compute prestige scores");
    add_common_options(sjr, o);
    CLI::App* jif = app.add_subcommand("jif", "Compute the JIF(3y) baseline");
    add_common_options(jif, o);
    CLI::App* compare =
        app.add_subcommand("compare", "Correlate the two metrics per grouping");
    add_common_options(compare, o);
    CLI::App* top = app.add_subcommand("top", "Top-k listings by either metric");
    add_common_options(top, o);
    top->add_option("--k,--top-k", o.top_k, "Listing length");
    CLI::App* age =
        app.add_subcommand("age-profile", "Reference age distribution per grouping");
    add_common_options(age, o);
    CLI::App* run = app.add_subcommand("run", "Full pipeline with manifest");
    add_common_options(run, o);
    run->add_option("--top-k", o.top_k, "Listing length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(o);
        if (network->parsed()) return cmd_network(o);
        if (sjr->parsed()) return cmd_sjr(o);
        if (jif->parsed()) return cmd_jif(o);
        if (compare->parsed()) return cmd_compare(o);
        if (top->parsed()) return cmd_top(o);
        if (age->parsed()) return cmd_age_profile(o);
        if (run->parsed()) return cmd_run(o);
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        return report_error(Error(e.what()));
    }
    return kExitUsage;
}
