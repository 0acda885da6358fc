// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "prestige/errors.hpp"
#include "prestige/log.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

RankedSeries rank_values(std::span<const std::string> journal_ids,
                         std::span<const std::optional<double>> values,
                         TiePolicy policy) {
    if (journal_ids.size() != values.size()) {
        throw Error("journal ids and values must have equal length");
    }
    RankedSeries series;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i]) {
            series.entries.push_back(RankedEntry{journal_ids[i], *values[i], 0.0});
        }
    }
    if (series.entries.empty()) throw Error("cannot rank an empty value set");

    std::sort(series.entries.begin(), series.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.value != b.value) return a.value > b.value;
                  return a.journal_id < b.journal_id;
              });

    if (policy == TiePolicy::competition) {
        for (std::size_t i = 0; i < series.entries.size(); ++i) {
            series.entries[i].rank = static_cast<double>(i + 1);
        }
        return series;
    }
    std::size_t i = 0;
    while (i < series.entries.size()) {
        std::size_t j = i;
        while (j + 1 < series.entries.size() &&
               series.entries[j + 1].value == series.entries[i].value) {
            ++j;
        }
        double mean_rank = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k) series.entries[k].rank = mean_rank;
        i = j + 1;
    }
    return series;
}

std::vector<double> tie_average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] < values[b];
        return a < b;
    });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double mean_rank = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

namespace {

double mean_of(std::span<const double> values) {
    CompensatedAccumulator acc;
    for (double v : values) acc.add(v);
    return acc.total() / static_cast<double>(values.size());
}

double centered_product_sum(std::span<const double> x, double mx,
                            std::span<const double> y, double my) {
    CompensatedAccumulator acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc.add((x[i] - mx) * (y[i] - my));
    return acc.total();
}

}  // namespace

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error("paired series must have equal length");
    if (x.size() < 2) throw Error("correlation needs at least 2 pairs");
    const double mx = mean_of(x);
    const double my = mean_of(y);
    const double sxx = centered_product_sum(x, mx, x, mx);
    const double syy = centered_product_sum(y, my, y, my);
    if (!(sxx > 0.0) || !(syy > 0.0)) return std::nullopt;
    const double r = centered_product_sum(x, mx, y, my) / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error("paired series must have equal length");
    if (x.size() < 2) throw Error("correlation needs at least 2 pairs");
    std::vector<double> rx = tie_average_ranks(x);
    std::vector<double> ry = tie_average_ranks(y);
    return pearson(rx, ry);
}

PowerLawFit fit_power_law(const RankedSeries& series) {
    std::vector<double> lx;
    std::vector<double> ly;
    for (const RankedEntry& entry : series.entries) {
        if (entry.value > 0.0) {
            lx.push_back(std::log(entry.rank));
            ly.push_back(std::log(entry.value));
        }
    }
    if (lx.size() < 2) throw Error("power-law fit needs at least 2 positive values");

    const double mx = mean_of(lx);
    const double my = mean_of(ly);
    const double sxx = centered_product_sum(lx, mx, lx, mx);
    const double sxy = centered_product_sum(lx, mx, ly, my);

    PowerLawFit fit;
    fit.points_used = lx.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    CompensatedAccumulator sq;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        sq.add(r * r);
    }
    fit.mean_squared_error = sq.total() / static_cast<double>(lx.size());
    return fit;
}

std::string_view to_string(GroupingLevel level) {
    switch (level) {
        case GroupingLevel::overall: return "overall";
        case GroupingLevel::area: return "area";
        case GroupingLevel::specific_area: return "specific_area";
    }
    return "overall";
}

std::optional<GroupingLevel> parse_grouping_level(std::string_view text) {
    if (text == "overall") return GroupingLevel::overall;
    if (text == "area") return GroupingLevel::area;
    if (text == "specific_area") return GroupingLevel::specific_area;
    return std::nullopt;
}

JournalGroups build_groups(std::span<const std::string> journal_ids,
                           const Corpus* corpus, GroupingLevel level) {
    JournalGroups result;
    if (level == GroupingLevel::overall) {
        std::vector<std::size_t> all(journal_ids.size());
        std::iota(all.begin(), all.end(), 0);
        result.groups.emplace_back("overall", std::move(all));
        return result;
    }
    if (corpus == nullptr) {
        throw Error("grouping by subject area requires a document-level corpus");
    }

    std::map<std::string, std::vector<std::size_t>> by_code;
    for (std::size_t i = 0; i < journal_ids.size(); ++i) {
        std::set<std::string> codes;
        if (auto idx = corpus->journal_index(journal_ids[i])) {
            for (const std::string& specific : corpus->journals()[*idx].area_codes) {
                if (level == GroupingLevel::specific_area) {
                    codes.insert(specific);
                } else if (const AreaInfo* info = corpus->find_area(specific)) {
                    codes.insert(info->area_code);
                } else {
                    codes.insert("unclassified");
                }
            }
        }
        if (codes.empty()) codes.insert("unclassified");
        for (const std::string& code : codes) by_code[code].push_back(i);
    }
    result.groups.assign(by_code.begin(), by_code.end());
    return result;
}

namespace {

std::optional<double> sample_sd(std::span<const double> values, double mean) {
    if (values.size() < 2) return std::nullopt;
    CompensatedAccumulator acc;
    for (double v : values) acc.add((v - mean) * (v - mean));
    return std::sqrt(acc.total() / static_cast<double>(values.size() - 1));
}

MetricSummary summarize_metric(std::span<const std::string> ids,
                               std::span<const double> values) {
    MetricSummary summary;
    summary.mean = mean_of(values);
    summary.sd = sample_sd(values, *summary.mean);

    std::size_t positive = 0;
    for (double v : values) {
        if (v > 0.0) ++positive;
    }
    if (positive >= 2) {
        std::vector<std::optional<double>> defined(values.begin(), values.end());
        summary.fit = fit_power_law(rank_values(ids, defined, TiePolicy::competition));
    }
    return summary;
}

struct SummaryStats {
    std::optional<double> mean;
    std::optional<double> sd;
};

SummaryStats across_groups(const std::vector<double>& values) {
    SummaryStats stats;
    if (values.empty()) return stats;
    stats.mean = mean_of(values);
    stats.sd = sample_sd(values, *stats.mean);
    return stats;
}

}  // namespace

ComparisonReport compare_metrics(std::span<const std::string> journal_ids,
                                 const SjrScores& sjr, const JifScores& jif,
                                 const Corpus* corpus, GroupingLevel level) {
    if (sjr.values.size() != journal_ids.size() || jif.values.size() != journal_ids.size()) {
        throw Error("score vectors must align with the journal id list");
    }

    ComparisonReport report;
    report.level = level;
    JournalGroups groups = build_groups(journal_ids, corpus, level);

    std::vector<double> spearmans;
    std::vector<double> pearsons;
    for (const auto& [code, members] : groups.groups) {
        std::vector<std::string> ids;
        std::vector<double> x;
        std::vector<double> y;
        for (std::size_t i : members) {
            if (sjr.values[i] && jif.values[i]) {
                ids.push_back(journal_ids[i]);
                x.push_back(*sjr.values[i]);
                y.push_back(*jif.values[i]);
            }
        }
        if (x.size() < 2) {
            report.notes.push_back("group '" + code +
                                   "' skipped: fewer than 2 journals with both metrics");
            continue;
        }
        GroupComparison group;
        group.group_code = code;
        group.n_journals = x.size();
        group.dropped = members.size() - x.size();
        group.spearman = spearman(x, y);
        group.pearson = pearson(x, y);
        group.sjr = summarize_metric(ids, x);
        group.jif = summarize_metric(ids, y);
        if (group.spearman) spearmans.push_back(*group.spearman);
        if (group.pearson) pearsons.push_back(*group.pearson);
        report.groups.push_back(std::move(group));
    }

    SummaryStats s = across_groups(spearmans);
    report.spearman_mean = s.mean;
    report.spearman_sd = s.sd;
    SummaryStats p = across_groups(pearsons);
    report.pearson_mean = p.mean;
    report.pearson_sd = p.sd;
    return report;
}

TopKTable top_k_table(std::span<const std::string> journal_ids,
                      std::span<const std::string> titles, const SjrScores& sjr,
                      const JifScores& jif, std::size_t k) {
    if (sjr.values.size() != journal_ids.size() || jif.values.size() != journal_ids.size()) {
        throw Error("score vectors must align with the journal id list");
    }
    if (!titles.empty() && titles.size() != journal_ids.size()) {
        throw Error("titles must align with the journal id list when given");
    }

    std::vector<TopEntry> paired;
    for (std::size_t i = 0; i < journal_ids.size(); ++i) {
        if (!sjr.values[i] || !jif.values[i]) continue;
        TopEntry entry;
        entry.journal_id = journal_ids[i];
        entry.title = titles.empty() ? "" : titles[i];
        entry.sjr = *sjr.values[i];
        entry.jif = *jif.values[i];
        paired.push_back(std::move(entry));
    }

    TopKTable table;
    table.k_requested = k;
    table.k_effective = std::min(k, paired.size());
    if (table.k_effective < k) {
        log_warn("top-k truncated to " + std::to_string(table.k_effective) +
                 " journals with both metrics defined");
    }

    std::vector<std::size_t> by_sjr(paired.size());
    std::iota(by_sjr.begin(), by_sjr.end(), 0);
    std::sort(by_sjr.begin(), by_sjr.end(), [&](std::size_t a, std::size_t b) {
        if (paired[a].sjr != paired[b].sjr) return paired[a].sjr > paired[b].sjr;
        return paired[a].journal_id < paired[b].journal_id;
    });
    std::vector<std::size_t> by_jif(paired.size());
    std::iota(by_jif.begin(), by_jif.end(), 0);
    std::sort(by_jif.begin(), by_jif.end(), [&](std::size_t a, std::size_t b) {
        if (paired[a].jif != paired[b].jif) return paired[a].jif > paired[b].jif;
        return paired[a].journal_id < paired[b].journal_id;
    });
    for (std::size_t pos = 0; pos < paired.size(); ++pos) {
        paired[by_sjr[pos]].sjr_rank = pos + 1;
        paired[by_jif[pos]].jif_rank = pos + 1;
    }

    std::set<std::string> sjr_ids;
    for (std::size_t pos = 0; pos < table.k_effective; ++pos) {
        table.by_sjr.push_back(paired[by_sjr[pos]]);
        sjr_ids.insert(paired[by_sjr[pos]].journal_id);
    }
    for (std::size_t pos = 0; pos < table.k_effective; ++pos) {
        table.by_jif.push_back(paired[by_jif[pos]]);
        if (sjr_ids.count(paired[by_jif[pos]].journal_id)) ++table.overlap;
    }
    return table;
}

std::vector<ScatterRow> scatter_export(std::span<const std::string> journal_ids,
                                       const SjrScores& sjr, const JifScores& jif) {
    if (sjr.values.size() != journal_ids.size() || jif.values.size() != journal_ids.size()) {
        throw Error("score vectors must align with the journal id list");
    }
    std::vector<ScatterRow> rows;
    for (std::size_t i = 0; i < journal_ids.size(); ++i) {
        if (!sjr.values[i] || !jif.values[i]) continue;
        ScatterRow row;
        row.journal_id = journal_ids[i];
        row.sjr = *sjr.values[i];
        row.jif = *jif.values[i];
        if (row.sjr > 0.0) row.ln_sjr = std::log(row.sjr);
        if (row.jif > 0.0) row.ln_jif = std::log(row.jif);
        rows.push_back(std::move(row));
    }
    return rows;
}

AgeProfile reference_age_profile(const Corpus& corpus, int target_year, int horizon,
                                 GroupingLevel level) {
    if (horizon < 1) throw Error("age-profile horizon must be >= 1");
    bool year_has_documents = false;
    for (const Document& doc : corpus.documents()) {
        if (doc.year == target_year) {
            year_has_documents = true;
            break;
        }
    }
    if (!year_has_documents) {
        throw EmptyYearError("no documents published in target year " +
                             std::to_string(target_year));
    }

    const std::size_t n = corpus.journals().size();
    std::vector<std::uint64_t> totals(n, 0);
    std::vector<std::vector<std::uint64_t>> ages(n,
                                                 std::vector<std::uint64_t>(horizon, 0));
    for (const ReferenceEdge& ref : corpus.references()) {
        auto citing = corpus.document_index(ref.citing_doc_id);
        const Document& src = corpus.documents()[*citing];
        if (src.year != target_year) continue;
        std::size_t j = *corpus.journal_index(src.journal_id);
        ++totals[j];
        auto cited = corpus.document_index(ref.cited_doc_id);
        if (!cited) continue;
        int age = target_year - corpus.documents()[*cited].year;
        if (age >= 1 && age <= horizon) ++ages[j][age - 1];
    }

    std::vector<std::string> ids;
    ids.reserve(n);
    for (const Journal& j : corpus.journals()) ids.push_back(j.id);
    JournalGroups groups = build_groups(ids, &corpus, level);

    AgeProfile profile;
    profile.target_year = target_year;
    profile.horizon = horizon;
    for (const auto& [code, members] : groups.groups) {
        AgeProfile::GroupRow row;
        row.group_code = code;
        row.percent.assign(static_cast<std::size_t>(horizon), std::nullopt);
        std::vector<std::uint64_t> counts(horizon, 0);
        for (std::size_t j : members) {
            row.total_refs += totals[j];
            for (int a = 0; a < horizon; ++a) counts[a] += ages[j][a];
        }
        if (row.total_refs > 0) {
            CompensatedAccumulator coverage;
            for (int a = 0; a < horizon; ++a) {
                double pct = 100.0 * static_cast<double>(counts[a]) /
                             static_cast<double>(row.total_refs);
                row.percent[a] = pct;
                coverage.add(pct);
            }
            row.coverage = coverage.total();
        }
        profile.groups.push_back(std::move(row));
    }
    return profile;
}

}  // namespace prestige
