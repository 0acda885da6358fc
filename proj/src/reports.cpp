// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/reports.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "prestige/csv.hpp"
#include "prestige/errors.hpp"
#include "prestige/numeric.hpp"
#include "prestige/version.hpp"

namespace prestige {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    return out;
}

ordered_json json_or_null(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::string field_or_empty(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

ordered_json fit_json(const std::optional<PowerLawFit>& fit) {
    if (!fit) return nullptr;
    ordered_json j;
    j["slope"] = fit->slope;
    j["intercept"] = fit->intercept;
    j["mean_squared_error"] = fit->mean_squared_error;
    j["points_used"] = fit->points_used;
    return j;
}

ordered_json metric_summary_json(const MetricSummary& summary) {
    ordered_json j;
    j["mean"] = json_or_null(summary.mean);
    j["sd"] = json_or_null(summary.sd);
    j["fit"] = fit_json(summary.fit);
    return j;
}

ordered_json config_json(const RunConfig& config) {
    ordered_json j;
    if (!config.journals.empty()) j["journals"] = config.journals;
    if (!config.documents.empty()) j["documents"] = config.documents;
    if (!config.references.empty()) j["references"] = config.references;
    if (!config.areas.empty()) j["areas"] = config.areas;
    if (!config.preagg_edges.empty()) j["preagg_edges"] = config.preagg_edges;
    if (!config.preagg_stats.empty()) j["preagg_stats"] = config.preagg_stats;
    j["target_year"] = config.target_year;
    j["window_years"] = config.network.window_years;
    j["self_cite_cap"] = config.network.self_cite_cap;
    j["art_scope"] = config.network.art_scope == NetworkParams::ArtScope::window
                         ? "window"
                         : "target_year";
    j["d"] = config.prestige.d;
    j["e"] = config.prestige.e;
    j["convergence_tol"] = config.prestige.convergence_tol;
    j["max_iterations"] = config.prestige.max_iterations;
    j["c"] = config.prestige.c;
    j["threads"] = config.prestige.threads;
    j["output_dir"] = config.output_dir;
    j["grouping_level"] = std::string(to_string(config.grouping));
    j["horizon"] = config.horizon;
    j["top_k"] = config.top_k;
    j["strict"] = config.strict;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out = open_output(path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

void write_scores_csv(const std::string& path, const CitationNetwork& net,
                      const PrestigeVector* psjr, const SjrScores* sjr,
                      const JifScores* jif) {
    std::ofstream out = open_output(path);
    csv::Writer w(out);

    std::vector<std::string> header = {"journal_id"};
    if (psjr != nullptr) header.push_back("psjr");
    if (sjr != nullptr) header.push_back("sjr");
    if (jif != nullptr) header.push_back("jif3y");
    header.push_back("art");
    header.push_back("dangling_flag");
    w.row(header);

    for (std::size_t i = 0; i < net.size(); ++i) {
        std::vector<std::string> row = {net.journal_ids()[i]};
        if (psjr != nullptr) row.push_back(format_double((*psjr)[i]));
        if (sjr != nullptr) row.push_back(field_or_empty(sjr->values[i]));
        if (jif != nullptr) row.push_back(field_or_empty(jif->values[i]));
        row.push_back(std::to_string(net.art_counts()[i]));
        row.push_back(net.is_dangling(i) ? "1" : "0");
        w.row(row);
    }
}

std::string scores_json(const ScoresDocument& doc) {
    if (doc.net == nullptr) throw Error("scores document needs a network");
    const CitationNetwork& net = *doc.net;

    ordered_json j;
    j["schema"] = "prestige-rank/scores/1";
    j["tool_version"] = kVersion;
    j["target_year"] = net.target_year();
    j["window_years"] = net.window_years();
    if (net.applied_cap()) j["self_cite_cap"] = *net.applied_cap();
    if (doc.params != nullptr) {
        ordered_json p;
        p["d"] = doc.params->d;
        p["e"] = doc.params->e;
        p["convergence_tol"] = doc.params->convergence_tol;
        p["max_iterations"] = doc.params->max_iterations;
        p["c"] = doc.params->c;
        p["threads"] = doc.params->threads;
        j["params"] = p;
    }
    if (doc.result != nullptr) {
        j["iterations_run"] = doc.result->iterations_run;
        j["final_delta"] = doc.result->final_delta;
        j["converged"] = doc.result->converged;
    }

    ordered_json journals = ordered_json::array();
    for (std::size_t i = 0; i < net.size(); ++i) {
        ordered_json row;
        row["journal_id"] = net.journal_ids()[i];
        if (doc.result != nullptr) row["psjr"] = doc.result->prestige[i];
        if (doc.sjr != nullptr) row["sjr"] = json_or_null(doc.sjr->values[i]);
        if (doc.jif != nullptr) row["jif3y"] = json_or_null(doc.jif->values[i]);
        row["art"] = net.art_counts()[i];
        row["dangling"] = net.is_dangling(i);
        journals.push_back(std::move(row));
    }
    j["journals"] = std::move(journals);
    return dump(j);
}

std::string validation_report_json(const Corpus& corpus, const ValidationReport& report) {
    ordered_json j;
    j["schema"] = "prestige-rank/validation/1";
    j["tool_version"] = kVersion;
    j["journals"] = corpus.journals().size();
    j["documents"] = corpus.documents().size();
    j["references"] = corpus.references().size();
    j["unresolved_references"] = corpus.unresolved_reference_count();
    j["unknown_doc_types"] = report.unknown_doc_type_count;
    j["journals_without_documents"] = report.journals_without_documents;
    j["documents_outside_year_bounds"] = report.documents_outside_year_bounds;
    j["fully_unresolved_journals"] = report.fully_unresolved_journals;
    ordered_json stats = ordered_json::array();
    for (const auto& s : report.reference_stats) {
        ordered_json row;
        row["journal_id"] = s.journal_id;
        row["references"] = s.references;
        row["unresolved"] = s.unresolved;
        row["unresolved_ratio"] = s.unresolved_ratio;
        stats.push_back(std::move(row));
    }
    j["reference_stats"] = std::move(stats);
    j["anomalies"] = report.anomaly_count();
    j["clean"] = report.clean();
    return dump(j);
}

std::string comparison_json(const ComparisonReport& report) {
    ordered_json j;
    j["schema"] = "prestige-rank/comparison/1";
    j["tool_version"] = kVersion;
    j["grouping_level"] = std::string(to_string(report.level));

    ordered_json summary;
    summary["groups_reported"] = report.groups.size();
    summary["spearman_mean"] = json_or_null(report.spearman_mean);
    summary["spearman_sd"] = json_or_null(report.spearman_sd);
    summary["pearson_mean"] = json_or_null(report.pearson_mean);
    summary["pearson_sd"] = json_or_null(report.pearson_sd);
    j["summary"] = std::move(summary);
    j["notes"] = report.notes;

    ordered_json groups = ordered_json::array();
    for (const GroupComparison& g : report.groups) {
        ordered_json row;
        row["group"] = g.group_code;
        row["n_journals"] = g.n_journals;
        row["dropped"] = g.dropped;
        row["spearman"] = json_or_null(g.spearman);
        row["pearson"] = json_or_null(g.pearson);
        row["sjr"] = metric_summary_json(g.sjr);
        row["jif3y"] = metric_summary_json(g.jif);
        groups.push_back(std::move(row));
    }
    j["groups"] = std::move(groups);
    return dump(j);
}

void write_comparison_csv(const std::string& path, const ComparisonReport& report) {
    std::ofstream out = open_output(path);
    csv::Writer w(out);
    w.row({"group", "n_journals", "dropped", "spearman", "pearson", "sjr_mean",
           "sjr_sd", "sjr_slope", "sjr_intercept", "sjr_mse", "jif3y_mean", "jif3y_sd",
           "jif3y_slope", "jif3y_intercept", "jif3y_mse"});
    auto fit_fields = [](const std::optional<PowerLawFit>& fit) {
        std::vector<std::string> f(3);
        if (fit) {
            f[0] = format_double(fit->slope);
            f[1] = format_double(fit->intercept);
            f[2] = format_double(fit->mean_squared_error);
        }
        return f;
    };
    for (const GroupComparison& g : report.groups) {
        std::vector<std::string> row = {g.group_code, std::to_string(g.n_journals),
                                        std::to_string(g.dropped),
                                        field_or_empty(g.spearman),
                                        field_or_empty(g.pearson)};
        row.push_back(field_or_empty(g.sjr.mean));
        row.push_back(field_or_empty(g.sjr.sd));
        for (auto& f : fit_fields(g.sjr.fit)) row.push_back(std::move(f));
        row.push_back(field_or_empty(g.jif.mean));
        row.push_back(field_or_empty(g.jif.sd));
        for (auto& f : fit_fields(g.jif.fit)) row.push_back(std::move(f));
        w.row(row);
    }
}

std::string topk_json(const TopKTable& table) {
    auto listing = [](const std::vector<TopEntry>& entries) {
        ordered_json rows = ordered_json::array();
        for (const TopEntry& e : entries) {
            ordered_json row;
            row["journal_id"] = e.journal_id;
            row["title"] = e.title;
            row["sjr"] = e.sjr;
            row["jif3y"] = e.jif;
            row["sjr_rank"] = e.sjr_rank;
            row["jif3y_rank"] = e.jif_rank;
            rows.push_back(std::move(row));
        }
        return rows;
    };

    ordered_json j;
    j["schema"] = "prestige-rank/topk/1";
    j["tool_version"] = kVersion;
    j["k_requested"] = table.k_requested;
    j["k_effective"] = table.k_effective;
    j["overlap"] = table.overlap;
    j["by_sjr"] = listing(table.by_sjr);
    j["by_jif3y"] = listing(table.by_jif);
    return dump(j);
}

void write_scatter_csv(const std::string& path, const std::vector<ScatterRow>& rows) {
    std::ofstream out = open_output(path);
    csv::Writer w(out);
    w.row({"journal_id", "sjr", "jif3y", "ln_sjr", "ln_jif3y"});
    for (const ScatterRow& r : rows) {
        w.row({r.journal_id, format_double(r.sjr), format_double(r.jif),
               field_or_empty(r.ln_sjr), field_or_empty(r.ln_jif)});
    }
}

void write_rank_distribution_csv(
    const std::string& path,
    const std::vector<std::pair<std::string, RankedSeries>>& series_by_metric) {
    std::ofstream out = open_output(path);
    csv::Writer w(out);
    w.row({"metric", "rank", "journal_id", "value", "ln_rank", "ln_value"});
    for (const auto& [metric, series] : series_by_metric) {
        for (const RankedEntry& e : series.entries) {
            std::string ln_value;
            if (e.value > 0.0) ln_value = format_double(std::log(e.value));
            w.row({metric, format_double(e.rank), e.journal_id, format_double(e.value),
                   format_double(std::log(e.rank)), ln_value});
        }
    }
}

void write_age_profile_csv(const std::string& path, const AgeProfile& profile) {
    std::ofstream out = open_output(path);
    csv::Writer w(out);
    w.row({"group_code", "total_refs", "coverage", "age", "percent"});
    for (const AgeProfile::GroupRow& g : profile.groups) {
        for (int a = 1; a <= profile.horizon; ++a) {
            w.row({g.group_code, std::to_string(g.total_refs),
                   field_or_empty(g.coverage), std::to_string(a),
                   field_or_empty(g.percent[static_cast<std::size_t>(a - 1)])});
        }
    }
}

std::string manifest_json(const RunManifest& manifest) {
    ordered_json j;
    j["schema"] = "prestige-rank/manifest/1";
    j["tool_version"] = kVersion;
    j["config"] = config_json(manifest.config);

    ordered_json network;
    network["journals"] = manifest.journal_count;
    network["edges"] = manifest.edge_count;
    network["dangling"] = manifest.dangling_count;
    j["network"] = std::move(network);

    ordered_json convergence;
    convergence["iterations_run"] = manifest.iterations_run;
    convergence["final_delta"] = manifest.final_delta;
    convergence["converged"] = manifest.converged;
    j["convergence"] = std::move(convergence);

    ordered_json artifacts = ordered_json::array();
    for (const ArtifactHash& a : manifest.artifacts) {
        ordered_json row;
        row["path"] = a.path;
        row["fnv1a64"] = a.fnv1a64;
        artifacts.push_back(std::move(row));
    }
    j["artifacts"] = std::move(artifacts);
    return dump(j);
}

}  // namespace prestige
