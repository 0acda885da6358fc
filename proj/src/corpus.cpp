// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "prestige/csv.hpp"
#include "prestige/errors.hpp"
#include "prestige/log.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

bool is_primary_item(DocType type) {
    return type == DocType::article || type == DocType::review ||
           type == DocType::conference_paper;
}

std::string_view to_string(DocType type) {
    switch (type) {
        case DocType::article: return "article";
        case DocType::review: return "review";
        case DocType::conference_paper: return "conference_paper";
        case DocType::other: return "other";
    }
    return "other";
}

DocType parse_doc_type(std::string_view text, bool* known) {
    if (known != nullptr) *known = true;
    if (text == "article") return DocType::article;
    if (text == "review") return DocType::review;
    if (text == "conference_paper") return DocType::conference_paper;
    if (text == "other") return DocType::other;
    if (known != nullptr) *known = false;
    return DocType::other;
}

namespace {

template <typename T, typename GetKey>
std::optional<std::size_t> sorted_lookup(const std::vector<T>& items, std::string_view key,
                                         GetKey get_key) {
    auto it = std::lower_bound(items.begin(), items.end(), key,
                               [&](const T& item, std::string_view k) { return get_key(item) < k; });
    if (it == items.end() || get_key(*it) != key) return std::nullopt;
    return static_cast<std::size_t>(it - items.begin());
}

}  // namespace

std::optional<std::size_t> Corpus::journal_index(std::string_view id) const {
    return sorted_lookup(journals_, id, [](const Journal& j) -> std::string_view { return j.id; });
}

std::optional<std::size_t> Corpus::document_index(std::string_view id) const {
    return sorted_lookup(documents_, id, [](const Document& d) -> std::string_view { return d.id; });
}

const AreaInfo* Corpus::find_area(std::string_view specific_code) const {
    auto it = std::lower_bound(
        areas_.begin(), areas_.end(), specific_code,
        [](const auto& entry, std::string_view k) { return entry.first < k; });
    if (it == areas_.end() || it->first != specific_code) return nullptr;
    return &it->second;
}

CorpusBuilder::CorpusBuilder(CorpusLimits limits) : limits_(limits) {
    if (limits_.year_min > limits_.year_max) {
        throw Error("invalid year bounds: year_min > year_max");
    }
}

void CorpusBuilder::add_journal(Journal journal) {
    if (journal.id.empty()) throw Error("journal id must be non-empty");
    journals_.push_back(std::move(journal));
}

void CorpusBuilder::add_document(Document document) {
    if (document.id.empty()) throw Error("document id must be non-empty");
    if (document.year < limits_.year_min || document.year > limits_.year_max) {
        throw Error("document '" + document.id + "' year " + std::to_string(document.year) +
                    " outside configured bounds [" + std::to_string(limits_.year_min) + ", " +
                    std::to_string(limits_.year_max) + "]");
    }
    documents_.push_back(std::move(document));
}

void CorpusBuilder::add_reference(ReferenceEdge edge) {
    if (edge.citing_doc_id.empty()) throw Error("citing document id must be non-empty");
    references_.push_back(std::move(edge));
}

void CorpusBuilder::add_area(std::string specific_code, AreaInfo info) {
    if (specific_code.empty()) throw Error("specific area code must be non-empty");
    areas_.emplace_back(std::move(specific_code), std::move(info));
}

Corpus CorpusBuilder::finalize() {
    Corpus corpus;
    corpus.limits_ = limits_;

    std::sort(journals_.begin(), journals_.end(),
              [](const Journal& a, const Journal& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < journals_.size(); ++i) {
        if (journals_[i].id == journals_[i - 1].id) {
            throw DuplicateKeyError("duplicate journal id '" + journals_[i].id + "'");
        }
    }
    corpus.journals_ = std::move(journals_);

    std::sort(documents_.begin(), documents_.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < documents_.size(); ++i) {
        if (documents_[i].id == documents_[i - 1].id) {
            throw DuplicateKeyError("duplicate document id '" + documents_[i].id + "'");
        }
    }
    for (const Document& doc : documents_) {
        if (!sorted_lookup(corpus.journals_, doc.journal_id,
                           [](const Journal& j) -> std::string_view { return j.id; })) {
            throw ReferentialError("document '" + doc.id + "' names unknown journal '" +
                                   doc.journal_id + "'");
        }
    }
    corpus.documents_ = std::move(documents_);

    std::sort(areas_.begin(), areas_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < areas_.size(); ++i) {
        if (areas_[i].first == areas_[i - 1].first) {
            throw DuplicateKeyError("duplicate specific area code '" + areas_[i].first + "'");
        }
    }
    corpus.areas_ = std::move(areas_);

    std::sort(references_.begin(), references_.end(), [](const ReferenceEdge& a, const ReferenceEdge& b) {
        if (a.citing_doc_id != b.citing_doc_id) return a.citing_doc_id < b.citing_doc_id;
        return a.cited_doc_id < b.cited_doc_id;
    });
    std::size_t unresolved = 0;
    for (const ReferenceEdge& edge : references_) {
        if (!corpus.document_index(edge.citing_doc_id)) {
            throw ReferentialError("reference cites from unknown document '" +
                                   edge.citing_doc_id + "'");
        }
        if (!corpus.document_index(edge.cited_doc_id)) ++unresolved;
    }
    corpus.references_ = std::move(references_);
    corpus.unresolved_references_ = unresolved;
    corpus.unknown_doc_types_ = unknown_doc_types_;
    return corpus;
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

void require_fields(csv::Reader& reader, const std::vector<std::string>& row,
                    std::size_t expected) {
    if (row.size() != expected) {
        reader.fail("expected " + std::to_string(expected) + " fields, got " +
                    std::to_string(row.size()));
    }
}

std::vector<std::string> split_area_codes(std::string_view raw) {
    std::vector<std::string> codes;
    std::size_t start = 0;
    while (start <= raw.size()) {
        std::size_t sep = raw.find(';', start);
        std::string_view piece =
            sep == std::string_view::npos ? raw.substr(start) : raw.substr(start, sep - start);
        if (!piece.empty()) codes.emplace_back(piece);
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return codes;
}

const std::vector<std::string> kJournalsHeader = {"journal_id", "title", "area_codes"};
const std::vector<std::string> kDocumentsHeader = {"doc_id", "journal_id", "year", "doc_type"};
const std::vector<std::string> kReferencesHeader = {"citing_doc_id", "cited_doc_id"};
const std::vector<std::string> kAreasHeader = {"specific_area_code", "area_code", "category_code"};

}  // namespace

Corpus load_corpus(const CorpusPaths& paths, CorpusLimits limits) {
    CorpusBuilder builder(limits);

    std::set<std::string> journal_ids;
    std::set<std::string> document_ids;

    {
        std::ifstream in = open_input(paths.journals);
        csv::Reader reader(in, paths.journals);
        if (csv::expect_header(reader, kJournalsHeader)) {
            while (auto row = reader.next()) {
                require_fields(reader, *row, 3);
                Journal j{(*row)[0], (*row)[1], split_area_codes((*row)[2])};
                if (j.id.empty()) reader.fail("journal_id must be non-empty");
                if (!journal_ids.insert(j.id).second) {
                    throw DuplicateKeyError(reader.source(), reader.record_line(),
                                            "duplicate journal id '" + j.id + "'");
                }
                builder.add_journal(std::move(j));
            }
        }
    }

    {
        std::ifstream in = open_input(paths.documents);
        csv::Reader reader(in, paths.documents);
        if (csv::expect_header(reader, kDocumentsHeader)) {
            while (auto row = reader.next()) {
                require_fields(reader, *row, 4);
                auto year = parse_int((*row)[2]);
                if (!year) reader.fail("invalid year '" + (*row)[2] + "'");
                if (*year < limits.year_min || *year > limits.year_max) {
                    reader.fail("year " + (*row)[2] + " outside configured bounds [" +
                                std::to_string(limits.year_min) + ", " +
                                std::to_string(limits.year_max) + "]");
                }
                bool known = true;
                DocType type = parse_doc_type((*row)[3], &known);
                if (!known) {
                    builder.note_unknown_doc_type();
                    log_warn(reader.source() + ":" + std::to_string(reader.record_line()) +
                             ": unknown doc_type '" + (*row)[3] + "' mapped to 'other'");
                }
                if (!journal_ids.count((*row)[1])) {
                    throw ReferentialError(reader.source(), reader.record_line(),
                                           "document '" + (*row)[0] + "' names unknown journal '" +
                                               (*row)[1] + "'");
                }
                if (!document_ids.insert((*row)[0]).second) {
                    throw DuplicateKeyError(reader.source(), reader.record_line(),
                                            "duplicate document id '" + (*row)[0] + "'");
                }
                builder.add_document(Document{(*row)[0], (*row)[1], static_cast<int>(*year), type});
            }
        }
    }

    {
        std::ifstream in = open_input(paths.references);
        csv::Reader reader(in, paths.references);
        if (csv::expect_header(reader, kReferencesHeader)) {
            while (auto row = reader.next()) {
                require_fields(reader, *row, 2);
                if (!document_ids.count((*row)[0])) {
                    throw ReferentialError(reader.source(), reader.record_line(),
                                           "reference cites from unknown document '" + (*row)[0] +
                                               "'");
                }
                builder.add_reference(ReferenceEdge{(*row)[0], (*row)[1]});
            }
        }
    }

    if (!paths.areas.empty()) {
        std::ifstream in = open_input(paths.areas);
        csv::Reader reader(in, paths.areas);
        if (csv::expect_header(reader, kAreasHeader)) {
            std::set<std::string> seen;
            while (auto row = reader.next()) {
                require_fields(reader, *row, 3);
                if (!seen.insert((*row)[0]).second) {
                    throw DuplicateKeyError(reader.source(), reader.record_line(),
                                            "duplicate specific area code '" + (*row)[0] + "'");
                }
                builder.add_area((*row)[0], AreaInfo{(*row)[1], (*row)[2]});
            }
        }
    }

    return builder.finalize();
}

void save_corpus(const Corpus& corpus, const CorpusPaths& paths) {
    {
        std::ofstream out = open_output(paths.journals);
        csv::Writer w(out);
        w.row({"journal_id", "title", "area_codes"});
        for (const Journal& j : corpus.journals()) {
            std::string codes;
            for (std::size_t i = 0; i < j.area_codes.size(); ++i) {
                if (i > 0) codes += ";";
                codes += j.area_codes[i];
            }
            w.row({j.id, j.title, codes});
        }
    }
    {
        std::ofstream out = open_output(paths.documents);
        csv::Writer w(out);
        w.row({"doc_id", "journal_id", "year", "doc_type"});
        for (const Document& d : corpus.documents()) {
            w.row({d.id, d.journal_id, std::to_string(d.year), std::string(to_string(d.type))});
        }
    }
    {
        std::ofstream out = open_output(paths.references);
        csv::Writer w(out);
        w.row({"citing_doc_id", "cited_doc_id"});
        for (const ReferenceEdge& e : corpus.references()) {
            w.row({e.citing_doc_id, e.cited_doc_id});
        }
    }
    if (!paths.areas.empty()) {
        std::ofstream out = open_output(paths.areas);
        csv::Writer w(out);
        w.row({"specific_area_code", "area_code", "category_code"});
        for (const auto& [code, info] : corpus.area_hierarchy()) {
            w.row({code, info.area_code, info.category_code});
        }
    }
}

ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport report;
    report.unknown_doc_type_count = corpus.unknown_doc_type_count();

    std::vector<std::uint64_t> docs_per_journal(corpus.journals().size(), 0);
    for (const Document& doc : corpus.documents()) {
        auto idx = corpus.journal_index(doc.journal_id);
        if (idx) ++docs_per_journal[*idx];
        if (doc.year < corpus.limits().year_min || doc.year > corpus.limits().year_max) {
            report.documents_outside_year_bounds.push_back(doc.id);
        }
    }
    for (std::size_t j = 0; j < corpus.journals().size(); ++j) {
        if (docs_per_journal[j] == 0) {
            report.journals_without_documents.push_back(corpus.journals()[j].id);
        }
    }

    std::vector<std::uint64_t> refs_per_journal(corpus.journals().size(), 0);
    std::vector<std::uint64_t> unresolved_per_journal(corpus.journals().size(), 0);
    for (const ReferenceEdge& edge : corpus.references()) {
        auto doc_idx = corpus.document_index(edge.citing_doc_id);
        if (!doc_idx) continue;  // finalize() guarantees resolution; guard anyway
        auto j = corpus.journal_index(corpus.documents()[*doc_idx].journal_id);
        if (!j) continue;
        ++refs_per_journal[*j];
        if (!corpus.document_index(edge.cited_doc_id)) ++unresolved_per_journal[*j];
    }
    for (std::size_t j = 0; j < corpus.journals().size(); ++j) {
        if (refs_per_journal[j] == 0) continue;
        double ratio = static_cast<double>(unresolved_per_journal[j]) /
                       static_cast<double>(refs_per_journal[j]);
        report.reference_stats.push_back(ValidationReport::JournalRefStats{
            corpus.journals()[j].id, refs_per_journal[j], unresolved_per_journal[j], ratio});
        if (unresolved_per_journal[j] == refs_per_journal[j]) {
            report.fully_unresolved_journals.push_back(corpus.journals()[j].id);
        }
    }
    return report;
}

}  // namespace prestige
