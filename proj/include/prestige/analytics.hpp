// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prestige/corpus.hpp"
#include "prestige/jif.hpp"
#include "prestige/psjr.hpp"

namespace prestige {

enum class TiePolicy { competition, average };

struct RankedEntry {
    std::string journal_id;
    double value = 0.0;
    double rank = 0.0;
};

/// Entries sorted by (value desc, journal_id asc). With the competition
/// policy ranks are the positions 1..M (ties broken by id); with the average
/// policy exact ties share the mean of their positions, for correlation use.
struct RankedSeries {
    std::vector<RankedEntry> entries;
};

/// Ranks the defined values; undefined entries are skipped. Throws when no
/// value is defined.
RankedSeries rank_values(std::span<const std::string> journal_ids,
                         std::span<const std::optional<double>> values,
                         TiePolicy policy);

/// 1-based ascending ranks with ties averaged; same order as the input.
std::vector<double> tie_average_ranks(std::span<const double> values);

/// Product-moment correlation; nullopt when either side has zero variance.
/// Throws on fewer than 2 pairs or length mismatch.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of average-tie ranks; nullopt on zero rank variance.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double mean_squared_error = 0.0;  // per-point, in log space
    std::size_t points_used = 0;
};

/// Least squares of ln(value) against ln(rank) over entries with value > 0.
/// Throws when fewer than 2 such entries exist.
PowerLawFit fit_power_law(const RankedSeries& series);

enum class GroupingLevel { overall, area, specific_area };

std::string_view to_string(GroupingLevel level);
std::optional<GroupingLevel> parse_grouping_level(std::string_view text);

/// Journal memberships per group code, codes sorted, member indices ascending.
/// `overall` puts every journal in one group and needs no corpus; the other
/// levels read area codes from the corpus and fall back to "unclassified" for
/// journals without a resolvable classification. A journal may belong to
/// several groups.
struct JournalGroups {
    std::vector<std::pair<std::string, std::vector<std::size_t>>> groups;
};

JournalGroups build_groups(std::span<const std::string> journal_ids,
                           const Corpus* corpus, GroupingLevel level);

struct MetricSummary {
    std::optional<double> mean;
    std::optional<double> sd;  // sample standard deviation
    std::optional<PowerLawFit> fit;
};

struct GroupComparison {
    std::string group_code;
    std::size_t n_journals = 0;  // journals with both metrics defined
    std::size_t dropped = 0;     // group members missing at least one metric
    std::optional<double> spearman;
    std::optional<double> pearson;
    MetricSummary sjr;
    MetricSummary jif;
};

struct ComparisonReport {
    GroupingLevel level = GroupingLevel::overall;
    std::vector<GroupComparison> groups;  // sorted by code; skipped groups absent
    std::vector<std::string> notes;
    // Unweighted across-group summary of the defined coefficients.
    std::optional<double> spearman_mean;
    std::optional<double> spearman_sd;
    std::optional<double> pearson_mean;
    std::optional<double> pearson_sd;
};

/// Pairs journals with both metrics defined inside each group and reports
/// correlations, per-metric mean/sd and power-law fits. Groups with fewer
/// than 2 paired journals are skipped with a note.
ComparisonReport compare_metrics(std::span<const std::string> journal_ids,
                                 const SjrScores& sjr, const JifScores& jif,
                                 const Corpus* corpus, GroupingLevel level);

struct TopEntry {
    std::string journal_id;
    std::string title;
    double sjr = 0.0;
    double jif = 0.0;
    std::size_t sjr_rank = 0;
    std::size_t jif_rank = 0;
};

struct TopKTable {
    std::vector<TopEntry> by_sjr;
    std::vector<TopEntry> by_jif;
    std::size_t overlap = 0;  // journals present in both listings
    std::size_t k_requested = 0;
    std::size_t k_effective = 0;
};

/// Two k-row listings over journals with both metrics defined, each row
/// carrying both competition ranks. k beyond the defined set truncates with
/// a warning. titles may be empty strings.
TopKTable top_k_table(std::span<const std::string> journal_ids,
                      std::span<const std::string> titles, const SjrScores& sjr,
                      const JifScores& jif, std::size_t k);

struct ScatterRow {
    std::string journal_id;
    double sjr = 0.0;
    double jif = 0.0;
    std::optional<double> ln_sjr;  // absent when the value is not positive
    std::optional<double> ln_jif;
};

/// One row per journal with both metrics defined, id order.
std::vector<ScatterRow> scatter_export(std::span<const std::string> journal_ids,
                                       const SjrScores& sjr, const JifScores& jif);

struct AgeProfile {
    struct GroupRow {
        std::string group_code;
        std::uint64_t total_refs = 0;  // all references issued in the target year
        std::vector<std::optional<double>> percent;  // index a-1 holds age a; all
                                                     // null when total_refs == 0
        std::optional<double> coverage;  // sum of the defined percentages
    };

    int target_year = 0;
    int horizon = 0;
    std::vector<GroupRow> groups;
};

/// Shares of the target year's references by age of the cited document,
/// age 1..horizon, per group. Unresolved references and ages outside the
/// horizon count toward the denominator only, so coverage <= 100.
AgeProfile reference_age_profile(const Corpus& corpus, int target_year, int horizon,
                                 GroupingLevel level);

}  // namespace prestige
