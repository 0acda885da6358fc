// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/citation_network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "prestige/csv.hpp"
#include "prestige/errors.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

void NetworkParams::validate() const {
    if (window_years < 1) throw Error("window_years must be >= 1");
    if (!(self_cite_cap >= 0.0 && self_cite_cap <= 1.0)) {
        throw Error("self_cite_cap must lie in [0, 1]");
    }
}

std::optional<std::size_t> CitationNetwork::journal_index(std::string_view id) const {
    auto it = std::lower_bound(journal_ids_.begin(), journal_ids_.end(), id);
    if (it == journal_ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - journal_ids_.begin());
}

std::span<const NetworkEdge> CitationNetwork::out_edges(std::size_t citing) const {
    return {edges_.data() + out_offsets_[citing],
            edges_.data() + out_offsets_[citing + 1]};
}

std::span<const NetworkEdge> CitationNetwork::in_edges(std::size_t cited) const {
    return {in_edges_.data() + in_offsets_[cited],
            in_edges_.data() + in_offsets_[cited + 1]};
}

double CitationNetwork::weight(std::size_t citing, std::size_t cited) const {
    auto span = out_edges(citing);
    auto it = std::lower_bound(span.begin(), span.end(), cited,
                               [](const NetworkEdge& e, std::size_t i) { return e.cited < i; });
    if (it == span.end() || it->cited != cited) return 0.0;
    return it->weight;
}

CitationNetwork CitationNetwork::create(Raw raw) {
    const std::size_t n = raw.journal_ids.size();
    if (n == 0) throw Error("network needs at least one journal");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(raw.journal_ids[i - 1] < raw.journal_ids[i])) {
            throw Error("journal ids must be strictly ascending; offender '" +
                        raw.journal_ids[i] + "'");
        }
    }
    if (raw.total_refs.size() != n || raw.art_counts.size() != n) {
        throw Error("per-journal arrays must match the journal count");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!(raw.total_refs[j] >= 0.0) || !std::isfinite(raw.total_refs[j])) {
            throw Error("total_refs must be finite and non-negative for '" +
                        raw.journal_ids[j] + "'");
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, double> merged;
    for (const NetworkEdge& e : raw.edges) {
        if (e.citing >= n || e.cited >= n) throw Error("edge journal index out of range");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
            throw Error("edge weight must be finite and non-negative");
        }
        if (e.weight == 0.0) continue;
        merged[{e.citing, e.cited}] += e.weight;
    }

    CitationNetwork net;
    net.journal_ids_ = std::move(raw.journal_ids);
    net.total_refs_ = std::move(raw.total_refs);
    net.art_counts_ = std::move(raw.art_counts);
    net.target_year_ = raw.target_year;
    net.window_years_ = raw.window_years;
    net.applied_cap_ = raw.applied_cap;

    net.edges_.reserve(merged.size());
    for (const auto& [key, weight] : merged) {
        net.edges_.push_back(NetworkEdge{key.first, key.second, weight});
    }

    net.out_offsets_.assign(n + 1, 0);
    net.dangling_.assign(n, 1);
    std::vector<double> out_sum(n, 0.0);
    for (const NetworkEdge& e : net.edges_) {
        ++net.out_offsets_[e.citing + 1];
        out_sum[e.citing] += e.weight;
        if (e.citing != e.cited) net.dangling_[e.citing] = 0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        net.out_offsets_[j + 1] += net.out_offsets_[j];
        if (out_sum[j] > net.total_refs_[j] * (1.0 + 1e-12) + 1e-9) {
            throw Error("windowed out-weight " + format_double(out_sum[j]) +
                        " exceeds total_refs " + format_double(net.total_refs_[j]) +
                        " for '" + net.journal_ids_[j] + "'");
        }
    }

    net.in_edges_ = net.edges_;
    std::sort(net.in_edges_.begin(), net.in_edges_.end(),
              [](const NetworkEdge& a, const NetworkEdge& b) {
                  if (a.cited != b.cited) return a.cited < b.cited;
                  return a.citing < b.citing;
              });
    net.in_offsets_.assign(n + 1, 0);
    for (const NetworkEdge& e : net.in_edges_) ++net.in_offsets_[e.cited + 1];
    for (std::size_t j = 0; j < n; ++j) net.in_offsets_[j + 1] += net.in_offsets_[j];

    return net;
}

CitationNetwork build_network(const Corpus& corpus, int target_year,
                              const NetworkParams& params) {
    params.validate();

    const std::size_t n = corpus.journals().size();
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

    const int window_lo = target_year - params.window_years;
    const int window_hi = target_year - 1;

    CitationNetwork::Raw raw;
    raw.journal_ids.reserve(n);
    for (const Journal& j : corpus.journals()) raw.journal_ids.push_back(j.id);
    raw.total_refs.assign(n, 0.0);
    raw.art_counts.assign(n, 0);
    raw.target_year = target_year;
    raw.window_years = params.window_years;

    for (const Document& doc : corpus.documents()) {
        if (!is_primary_item(doc.type)) continue;
        bool counted = params.art_scope == NetworkParams::ArtScope::window
                           ? doc.year >= window_lo && doc.year <= window_hi
                           : doc.year == target_year;
        if (counted) ++raw.art_counts[*corpus.journal_index(doc.journal_id)];
    }

    std::map<std::pair<std::size_t, std::size_t>, double> counts;
    for (const ReferenceEdge& ref : corpus.references()) {
        auto citing_doc = corpus.document_index(ref.citing_doc_id);
        const Document& src = corpus.documents()[*citing_doc];
        if (src.year != target_year) continue;
        std::size_t j = *corpus.journal_index(src.journal_id);
        raw.total_refs[j] += 1.0;
        auto cited_doc = corpus.document_index(ref.cited_doc_id);
        if (!cited_doc) continue;
        const Document& dst = corpus.documents()[*cited_doc];
        if (dst.year < window_lo || dst.year > window_hi) continue;
        std::size_t i = *corpus.journal_index(dst.journal_id);
        counts[{j, i}] += 1.0;
    }
    raw.edges.reserve(counts.size());
    for (const auto& [key, weight] : counts) {
        raw.edges.push_back(NetworkEdge{key.first, key.second, weight});
    }

    return CitationNetwork::create(std::move(raw));
}

CitationNetwork cap_self_citations(const CitationNetwork& net, double cap) {
    if (!(cap >= 0.0 && cap <= 1.0)) throw Error("self_cite_cap must lie in [0, 1]");

    CitationNetwork::Raw raw;
    raw.journal_ids = net.journal_ids();
    raw.total_refs = net.total_refs();
    raw.art_counts = net.art_counts();
    raw.target_year = net.target_year();
    raw.window_years = net.window_years();
    raw.applied_cap = cap;
    raw.edges.reserve(net.edges().size());
    for (const NetworkEdge& e : net.edges()) {
        double w = e.weight;
        if (e.citing == e.cited) w = std::min(w, cap * net.total_refs()[e.citing]);
        raw.edges.push_back(NetworkEdge{e.citing, e.cited, w});
    }
    return CitationNetwork::create(std::move(raw));
}

std::vector<std::size_t> dangling_set(const CitationNetwork& net) {
    std::vector<std::size_t> result;
    for (std::size_t j = 0; j < net.size(); ++j) {
        if (net.is_dangling(j)) result.push_back(j);
    }
    return result;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    return out;
}

const std::vector<std::string> kSnapshotEdgesHeader = {"citing_journal_id",
                                                       "cited_journal_id", "weight"};
const std::vector<std::string> kSnapshotStatsHeader = {"journal_id", "total_refs",
                                                       "art_count", "dangling_flag"};
const std::vector<std::string> kPreaggEdgesHeader = {"citing_journal_id",
                                                     "cited_journal_id", "count",
                                                     "window_flag"};
const std::vector<std::string> kPreaggStatsHeader = {"journal_id", "total_refs",
                                                     "art_count"};

struct StatsRow {
    double total_refs = 0.0;
    std::uint64_t art_count = 0;
    int dangling_flag = -1;  // -1 = column absent
};

/// Shared loader core for snapshot and pre-aggregated stats files.
std::map<std::string, StatsRow> read_stats(const std::string& path, bool with_dangling) {
    std::ifstream in = open_input(path);
    csv::Reader reader(in, path);
    std::map<std::string, StatsRow> rows;
    const auto& header = with_dangling ? kSnapshotStatsHeader : kPreaggStatsHeader;
    if (!csv::expect_header(reader, header)) return rows;
    while (auto row = reader.next()) {
        if (row->size() != header.size()) {
            reader.fail("expected " + std::to_string(header.size()) + " fields, got " +
                        std::to_string(row->size()));
        }
        if ((*row)[0].empty()) reader.fail("journal_id must be non-empty");
        StatsRow stats;
        auto refs = parse_double((*row)[1]);
        if (!refs || !(*refs >= 0.0)) reader.fail("invalid total_refs '" + (*row)[1] + "'");
        stats.total_refs = *refs;
        auto art = parse_int((*row)[2]);
        if (!art || *art < 0) reader.fail("invalid art_count '" + (*row)[2] + "'");
        stats.art_count = static_cast<std::uint64_t>(*art);
        if (with_dangling) {
            if ((*row)[3] != "0" && (*row)[3] != "1") {
                reader.fail("invalid dangling_flag '" + (*row)[3] + "'");
            }
            stats.dangling_flag = (*row)[3] == "1" ? 1 : 0;
        }
        if (!rows.emplace((*row)[0], stats).second) {
            throw DuplicateKeyError(reader.source(), reader.record_line(),
                                    "duplicate journal id '" + (*row)[0] + "'");
        }
    }
    return rows;
}

CitationNetwork::Raw raw_from_stats(const std::map<std::string, StatsRow>& stats,
                                    int target_year, int window_years) {
    CitationNetwork::Raw raw;
    raw.target_year = target_year;
    raw.window_years = window_years;
    raw.journal_ids.reserve(stats.size());
    for (const auto& [id, row] : stats) {
        raw.journal_ids.push_back(id);
        raw.total_refs.push_back(row.total_refs);
        raw.art_counts.push_back(row.art_count);
    }
    return raw;
}

std::size_t journal_index_or_fail(const std::vector<std::string>& ids,
                                  const std::string& id, csv::Reader& reader) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
        throw ReferentialError(reader.source(), reader.record_line(),
                               "edge names journal '" + id + "' absent from the stats file");
    }
    return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

void save_network(const CitationNetwork& net, const NetworkSnapshotPaths& paths) {
    {
        std::ofstream out = open_output(paths.edges);
        csv::Writer w(out);
        w.row(kSnapshotEdgesHeader);
        for (const NetworkEdge& e : net.edges()) {
            w.row({net.journal_ids()[e.citing], net.journal_ids()[e.cited],
                   format_double(e.weight)});
        }
    }
    {
        std::ofstream out = open_output(paths.stats);
        csv::Writer w(out);
        w.row(kSnapshotStatsHeader);
        for (std::size_t j = 0; j < net.size(); ++j) {
            w.row({net.journal_ids()[j], format_double(net.total_refs()[j]),
                   std::to_string(net.art_counts()[j]), net.is_dangling(j) ? "1" : "0"});
        }
    }
}

CitationNetwork load_network(const NetworkSnapshotPaths& paths, int target_year,
                             int window_years, std::optional<double> applied_cap) {
    auto stats = read_stats(paths.stats, /*with_dangling=*/true);
    CitationNetwork::Raw raw = raw_from_stats(stats, target_year, window_years);
    raw.applied_cap = applied_cap;

    {
        std::ifstream in = open_input(paths.edges);
        csv::Reader reader(in, paths.edges);
        if (csv::expect_header(reader, kSnapshotEdgesHeader)) {
            while (auto row = reader.next()) {
                if (row->size() != 3) {
                    reader.fail("expected 3 fields, got " + std::to_string(row->size()));
                }
                std::size_t citing = journal_index_or_fail(raw.journal_ids, (*row)[0], reader);
                std::size_t cited = journal_index_or_fail(raw.journal_ids, (*row)[1], reader);
                auto weight = parse_double((*row)[2]);
                if (!weight || !(*weight >= 0.0)) {
                    reader.fail("invalid weight '" + (*row)[2] + "'");
                }
                raw.edges.push_back(NetworkEdge{citing, cited, *weight});
            }
        }
    }

    CitationNetwork net = CitationNetwork::create(std::move(raw));
    for (const auto& [id, row] : stats) {
        std::size_t j = *net.journal_index(id);
        if (net.is_dangling(j) != (row.dangling_flag == 1)) {
            throw ParseError(paths.stats + ": dangling_flag for '" + id +
                             "' contradicts the edge list");
        }
    }
    return net;
}

CitationNetwork load_preaggregated(const PreaggregatedPaths& paths, int target_year,
                                   int window_years) {
    auto stats = read_stats(paths.stats, /*with_dangling=*/false);
    CitationNetwork::Raw raw = raw_from_stats(stats, target_year, window_years);

    std::ifstream in = open_input(paths.edges);
    csv::Reader reader(in, paths.edges);
    if (csv::expect_header(reader, kPreaggEdgesHeader)) {
        while (auto row = reader.next()) {
            if (row->size() != 4) {
                reader.fail("expected 4 fields, got " + std::to_string(row->size()));
            }
            std::size_t citing = journal_index_or_fail(raw.journal_ids, (*row)[0], reader);
            std::size_t cited = journal_index_or_fail(raw.journal_ids, (*row)[1], reader);
            auto count = parse_int((*row)[2]);
            if (!count || *count < 0) reader.fail("invalid count '" + (*row)[2] + "'");
            if ((*row)[3] != "0" && (*row)[3] != "1") {
                reader.fail("invalid window_flag '" + (*row)[3] + "'");
            }
            if ((*row)[3] == "0") continue;
            raw.edges.push_back(
                NetworkEdge{citing, cited, static_cast<double>(*count)});
        }
    }

    return CitationNetwork::create(std::move(raw));
}

}  // namespace prestige
