// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prestige/corpus.hpp"

namespace prestige {

struct NetworkParams {
    enum class ArtScope { window, target_year };

    int window_years = 3;
    double self_cite_cap = 0.33;
    ArtScope art_scope = ArtScope::window;

    void validate() const;
    bool operator==(const NetworkParams&) const = default;
};

struct NetworkEdge {
    std::size_t citing = 0;
    std::size_t cited = 0;
    double weight = 0.0;
};

/// Windowed journal citation graph for one target year. weight(j, i) is the
/// (possibly capped) count of references from journal j's target-year
/// documents to journal i's window-year documents; total_refs()[j] counts all
/// references j issued that year, resolved or not, any cited year. Immutable
/// after create(); safe to share across threads.
class CitationNetwork {
public:
    struct Raw {
        std::vector<std::string> journal_ids;  // sorted ascending, unique
        std::vector<NetworkEdge> edges;        // any order; duplicates merged by sum
        std::vector<double> total_refs;
        std::vector<std::uint64_t> art_counts;
        int target_year = 0;
        int window_years = 3;
        std::optional<double> applied_cap;  // set once the diagonal has been capped
    };

    /// Validates invariants (sorted ids, index bounds, non-negative weights,
    /// out-weight sums bounded by total_refs), drops zero-weight edges, and
    /// computes the dangling set.
    static CitationNetwork create(Raw raw);

    std::size_t size() const { return journal_ids_.size(); }
    const std::vector<std::string>& journal_ids() const { return journal_ids_; }
    std::optional<std::size_t> journal_index(std::string_view id) const;
    int target_year() const { return target_year_; }
    int window_years() const { return window_years_; }
    std::optional<double> applied_cap() const { return applied_cap_; }

    /// Canonical edge list, sorted by (citing, cited), zero weights absent.
    const std::vector<NetworkEdge>& edges() const { return edges_; }
    std::span<const NetworkEdge> out_edges(std::size_t citing) const;
    /// In-edges of one cited journal in ascending citing order; the iteration
    /// gathers over these so per-journal sums have a fixed evaluation order.
    std::span<const NetworkEdge> in_edges(std::size_t cited) const;

    double weight(std::size_t citing, std::size_t cited) const;
    double self_weight(std::size_t j) const { return weight(j, j); }

    const std::vector<double>& total_refs() const { return total_refs_; }
    const std::vector<std::uint64_t>& art_counts() const { return art_counts_; }

    /// True when j has no positive-weight edge to any other journal.
    /// Self-loops do not rescue a journal from danglinghood.
    bool is_dangling(std::size_t j) const { return dangling_[j] != 0; }
    const std::vector<char>& dangling_flags() const { return dangling_; }

private:
    CitationNetwork() = default;

    std::vector<std::string> journal_ids_;
    std::vector<NetworkEdge> edges_;         // CSR order: (citing, cited)
    std::vector<std::size_t> out_offsets_;   // size N+1 into edges_
    std::vector<NetworkEdge> in_edges_;      // CSC order: (cited, citing)
    std::vector<std::size_t> in_offsets_;    // size N+1 into in_edges_
    std::vector<double> total_refs_;
    std::vector<std::uint64_t> art_counts_;
    std::vector<char> dangling_;
    int target_year_ = 0;
    int window_years_ = 0;
    std::optional<double> applied_cap_;
};

/// Counts every reference issued by target-year documents: resolved in-window
/// references become edges, everything else only raises total_refs. Art is
/// counted over the window years (or the target year, per params.art_scope).
/// Self-citation capping is NOT applied here.
CitationNetwork build_network(const Corpus& corpus, int target_year,
                              const NetworkParams& params);

/// Returns a copy whose diagonal is limited to min(C[j][j], cap * total_refs[j])
/// as a real-valued weight. Off-diagonal entries, total_refs and Art are
/// untouched. Idempotent.
CitationNetwork cap_self_citations(const CitationNetwork& net, double cap);

/// Ascending indices of journals with no positive out-weight to another journal.
std::vector<std::size_t> dangling_set(const CitationNetwork& net);

struct NetworkSnapshotPaths {
    std::string edges;  // citing_journal_id,cited_journal_id,weight
    std::string stats;  // journal_id,total_refs,art_count,dangling_flag
};

/// Canonical snapshot; save followed by load round-trips bit-exactly.
void save_network(const CitationNetwork& net, const NetworkSnapshotPaths& paths);
CitationNetwork load_network(const NetworkSnapshotPaths& paths, int target_year,
                             int window_years,
                             std::optional<double> applied_cap = std::nullopt);

struct PreaggregatedPaths {
    std::string edges;  // citing_journal_id,cited_journal_id,count,window_flag
    std::string stats;  // journal_id,total_refs,art_count
};

/// Journal-level input that bypasses the document layer. Rows with
/// window_flag 1 become edges; rows with window_flag 0 are out-of-window
/// references already included in total_refs and add no edge.
CitationNetwork load_preaggregated(const PreaggregatedPaths& paths, int target_year,
                                   int window_years);

}  // namespace prestige
