// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prestige/analytics.hpp"
#include "prestige/errors.hpp"
#include "prestige/jif.hpp"
#include "prestige/log.hpp"
#include "prestige/numeric.hpp"
#include "prestige/psjr.hpp"
#include "prestige/reports.hpp"

namespace prestige {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw StagedError(name, e);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for hashing");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Corpus load_configured_corpus(const RunConfig& config) {
    if (config.preaggregated()) {
        throw Error("pre-aggregated input has no document-level corpus");
    }
    CorpusPaths paths{config.journals, config.documents, config.references, config.areas};
    return load_corpus(paths);
}

CitationNetwork build_uncapped_network(const RunConfig& config, const Corpus* corpus) {
    if (config.preaggregated()) {
        return load_preaggregated(
            PreaggregatedPaths{config.preagg_edges, config.preagg_stats},
            config.target_year, config.network.window_years);
    }
    if (corpus != nullptr) {
        return build_network(*corpus, config.target_year, config.network);
    }
    Corpus loaded = load_configured_corpus(config);
    return build_network(loaded, config.target_year, config.network);
}

PipelineOutcome run_pipeline(const RunConfig& config) {
    stage("config", [&] { config.validate(); });

    std::optional<Corpus> corpus;
    std::optional<ValidationReport> validation;
    if (!config.preaggregated()) {
        stage("ingest", [&] {
            corpus = load_configured_corpus(config);
            validation = validate_corpus(*corpus);
            if (!validation->clean()) {
                log_warn("corpus validation found " +
                         std::to_string(validation->anomaly_count()) + " anomalies");
            }
        });
    }

    CitationNetwork uncapped = stage("network", [&] {
        return build_uncapped_network(config, corpus ? &*corpus : nullptr);
    });
    CitationNetwork capped = stage("network", [&] {
        return cap_self_citations(uncapped, config.network.self_cite_cap);
    });

    PsjrResult psjr = stage("sjr", [&] {
        PsjrResult result = compute_psjr(capped, config.prestige);
        if (config.strict && !result.converged) {
            throw NonConvergenceError(
                "iteration did not converge within " +
                std::to_string(config.prestige.max_iterations) +
                " iterations (final delta " + format_double(result.final_delta) + ")");
        }
        return result;
    });
    SjrScores sjr = stage("sjr", [&] {
        return normalize_to_sjr(psjr.prestige, capped, config.prestige.c);
    });
    JifScores jif = stage("jif", [&] { return compute_jif3y(uncapped); });

    const std::vector<std::string>& ids = capped.journal_ids();
    std::vector<std::string> titles(ids.size());
    if (corpus) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (auto idx = corpus->journal_index(ids[i])) {
                titles[i] = corpus->journals()[*idx].title;
            }
        }
    }

    ComparisonReport comparison = stage("compare", [&] {
        return compare_metrics(ids, sjr, jif, corpus ? &*corpus : nullptr,
                               config.grouping);
    });
    TopKTable topk = stage("top", [&] {
        return top_k_table(ids, titles, sjr, jif,
                           static_cast<std::size_t>(config.top_k));
    });
    std::vector<ScatterRow> scatter =
        stage("compare", [&] { return scatter_export(ids, sjr, jif); });

    std::vector<std::pair<std::string, RankedSeries>> distributions;
    stage("compare", [&] {
        distributions.emplace_back(
            "sjr", rank_values(ids, sjr.values, TiePolicy::competition));
        distributions.emplace_back(
            "jif3y", rank_values(ids, jif.values, TiePolicy::competition));
    });

    std::optional<AgeProfile> ages;
    if (corpus) {
        ages = stage("age-profile", [&] {
            return reference_age_profile(*corpus, config.target_year, config.horizon,
                                         config.grouping);
        });
    }

    PipelineOutcome outcome;
    outcome.converged = psjr.converged;
    outcome.iterations_run = psjr.iterations_run;
    outcome.final_delta = psjr.final_delta;
    outcome.journal_count = capped.size();
    outcome.output_dir = config.output_dir;

    stage("write", [&] {
        std::filesystem::create_directories(config.output_dir);
        auto path_of = [&](const std::string& name) {
            return (std::filesystem::path(config.output_dir) / name).string();
        };

        if (validation) {
            write_text_file(path_of("validation.json"),
                            validation_report_json(*corpus, *validation));
            outcome.artifacts.push_back("validation.json");
        }

        save_network(capped, NetworkSnapshotPaths{path_of("network_edges.csv"),
                                                  path_of("network_stats.csv")});
        outcome.artifacts.push_back("network_edges.csv");
        outcome.artifacts.push_back("network_stats.csv");

        write_scores_csv(path_of("scores.csv"), capped, &psjr.prestige, &sjr, &jif);
        outcome.artifacts.push_back("scores.csv");
        ScoresDocument doc;
        doc.net = &capped;
        doc.params = &config.prestige;
        doc.result = &psjr;
        doc.sjr = &sjr;
        doc.jif = &jif;
        write_text_file(path_of("scores.json"), scores_json(doc));
        outcome.artifacts.push_back("scores.json");

        write_text_file(path_of("comparison.json"), comparison_json(comparison));
        outcome.artifacts.push_back("comparison.json");
        write_comparison_csv(path_of("comparison.csv"), comparison);
        outcome.artifacts.push_back("comparison.csv");

        write_text_file(path_of("topk.json"), topk_json(topk));
        outcome.artifacts.push_back("topk.json");

        write_scatter_csv(path_of("scatter.csv"), scatter);
        outcome.artifacts.push_back("scatter.csv");
        write_rank_distribution_csv(path_of("rank_distribution.csv"), distributions);
        outcome.artifacts.push_back("rank_distribution.csv");

        if (ages) {
            write_age_profile_csv(path_of("age_profile.csv"), *ages);
            outcome.artifacts.push_back("age_profile.csv");
        }

        save_run_config(config, path_of("run_config.toml"));
        outcome.artifacts.push_back("run_config.toml");

        RunManifest manifest;
        manifest.config = config;
        manifest.journal_count = capped.size();
        manifest.edge_count = capped.edges().size();
        manifest.dangling_count = dangling_set(capped).size();
        manifest.iterations_run = psjr.iterations_run;
        manifest.final_delta = psjr.final_delta;
        manifest.converged = psjr.converged;
        std::sort(outcome.artifacts.begin(), outcome.artifacts.end());
        for (const std::string& name : outcome.artifacts) {
            manifest.artifacts.push_back(
                ArtifactHash{name, fnv1a64_hex(read_file(path_of(name)))});
        }
        write_text_file(path_of("manifest.json"), manifest_json(manifest));
        outcome.artifacts.push_back("manifest.json");
    });

    log_info("pipeline finished: " + std::to_string(outcome.artifacts.size()) +
             " artifacts in " + config.output_dir);
    return outcome;
}

}  // namespace prestige
