// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prestige {

enum class DocType { article, review, conference_paper, other };

/// Primary items are articles, reviews and conference papers; only they
/// count toward a journal's publication output.
bool is_primary_item(DocType type);

std::string_view to_string(DocType type);

/// Unknown strings map to DocType::other; `known` reports whether the string
/// was one of the four canonical names.
DocType parse_doc_type(std::string_view text, bool* known = nullptr);

struct Journal {
    std::string id;
    std::string title;
    std::vector<std::string> area_codes;  // specific subject area codes, may be empty
};

struct Document {
    std::string id;
    std::string journal_id;
    int year = 0;
    DocType type = DocType::other;
};

struct ReferenceEdge {
    std::string citing_doc_id;
    std::string cited_doc_id;  // may point outside the corpus (unresolved)
};

struct AreaInfo {
    std::string area_code;
    std::string category_code;
};

struct CorpusLimits {
    int year_min = 1800;
    int year_max = 2100;
};

/// Immutable, fully indexed bibliographic dataset. All collections are kept
/// in canonical sorted order, so two corpora built from the same rows in any
/// order compare identical. Safe to share across threads after construction.
class Corpus {
public:
    const std::vector<Journal>& journals() const { return journals_; }
    const std::vector<Document>& documents() const { return documents_; }
    const std::vector<ReferenceEdge>& references() const { return references_; }
    const std::vector<std::pair<std::string, AreaInfo>>& area_hierarchy() const {
        return areas_;
    }

    std::optional<std::size_t> journal_index(std::string_view id) const;
    std::optional<std::size_t> document_index(std::string_view id) const;
    const AreaInfo* find_area(std::string_view specific_code) const;

    std::size_t unresolved_reference_count() const { return unresolved_references_; }
    std::size_t unknown_doc_type_count() const { return unknown_doc_types_; }
    const CorpusLimits& limits() const { return limits_; }

private:
    friend class CorpusBuilder;

    std::vector<Journal> journals_;        // sorted by id
    std::vector<Document> documents_;      // sorted by id
    std::vector<ReferenceEdge> references_;  // sorted by (citing, cited); duplicates kept
    std::vector<std::pair<std::string, AreaInfo>> areas_;  // sorted by specific code
    std::size_t unresolved_references_ = 0;
    std::size_t unknown_doc_types_ = 0;
    CorpusLimits limits_;
};

/// Accumulates rows and validates them; finalize() sorts, indexes and checks
/// referential integrity. Loaders report errors with file/line context before
/// rows ever reach the builder, so builder errors carry ids only.
class CorpusBuilder {
public:
    explicit CorpusBuilder(CorpusLimits limits = {});

    void add_journal(Journal journal);
    void add_document(Document document);
    void add_reference(ReferenceEdge edge);
    void add_area(std::string specific_code, AreaInfo info);
    void note_unknown_doc_type() { ++unknown_doc_types_; }

    Corpus finalize();

private:
    CorpusLimits limits_;
    std::vector<Journal> journals_;
    std::vector<Document> documents_;
    std::vector<ReferenceEdge> references_;
    std::vector<std::pair<std::string, AreaInfo>> areas_;
    std::size_t unknown_doc_types_ = 0;
};

struct CorpusPaths {
    std::string journals;
    std::string documents;
    std::string references;
    std::string areas;  // optional; empty string = no hierarchy table
};

Corpus load_corpus(const CorpusPaths& paths, CorpusLimits limits = {});

/// Writes the canonical CSV form. A corpus saved and reloaded round-trips
/// bit-exactly.
void save_corpus(const Corpus& corpus, const CorpusPaths& paths);

struct ValidationReport {
    struct JournalRefStats {
        std::string journal_id;
        std::uint64_t references = 0;
        std::uint64_t unresolved = 0;
        double unresolved_ratio = 0.0;
    };

    std::vector<std::string> journals_without_documents;
    std::vector<std::string> documents_outside_year_bounds;
    std::vector<JournalRefStats> reference_stats;          // journals with >= 1 reference
    std::vector<std::string> fully_unresolved_journals;    // unresolved_ratio == 1.0
    std::uint64_t unknown_doc_type_count = 0;

    std::size_t anomaly_count() const {
        return journals_without_documents.size() + documents_outside_year_bounds.size() +
               fully_unresolved_journals.size();
    }
    bool clean() const { return anomaly_count() == 0; }
};

ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace prestige
