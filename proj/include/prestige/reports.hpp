// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prestige/analytics.hpp"
#include "prestige/citation_network.hpp"
#include "prestige/corpus.hpp"
#include "prestige/jif.hpp"
#include "prestige/psjr.hpp"
#include "prestige/run_config.hpp"

namespace prestige {

// Every artifact stamps its schema: CSV files through their exact header row,
// JSON files through a "schema" field. Doubles are rendered so they parse
// back bit-exactly, which keeps reruns byte-identical.

void write_text_file(const std::string& path, std::string_view content);

/// Columns: journal_id, then psjr/sjr/jif3y for whichever inputs are non-null,
/// then art and dangling_flag. Undefined scores are empty fields, never 0.
void write_scores_csv(const std::string& path, const CitationNetwork& net,
                      const PrestigeVector* psjr, const SjrScores* sjr,
                      const JifScores* jif);

struct ScoresDocument {
    const CitationNetwork* net = nullptr;  // required
    const PrestigeParams* params = nullptr;
    const PsjrResult* result = nullptr;
    const SjrScores* sjr = nullptr;
    const JifScores* jif = nullptr;
};

std::string scores_json(const ScoresDocument& doc);

std::string validation_report_json(const Corpus& corpus, const ValidationReport& report);

std::string comparison_json(const ComparisonReport& report);
void write_comparison_csv(const std::string& path, const ComparisonReport& report);

std::string topk_json(const TopKTable& table);

void write_scatter_csv(const std::string& path, const std::vector<ScatterRow>& rows);

/// One block per metric, rows in rank order; ln columns are empty for
/// non-positive values so both log-log and semi-log plots can be drawn.
void write_rank_distribution_csv(
    const std::string& path,
    const std::vector<std::pair<std::string, RankedSeries>>& series_by_metric);

void write_age_profile_csv(const std::string& path, const AgeProfile& profile);

struct ArtifactHash {
    std::string path;  // relative to the output directory
    std::string fnv1a64;
};

struct RunManifest {
    RunConfig config;
    std::size_t journal_count = 0;
    std::size_t edge_count = 0;
    std::size_t dangling_count = 0;
    int iterations_run = 0;
    double final_delta = 0.0;
    bool converged = false;
    std::vector<ArtifactHash> artifacts;  // sorted by path
};

std::string manifest_json(const RunManifest& manifest);

}  // namespace prestige
