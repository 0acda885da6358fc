// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/run_config.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "prestige/errors.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

namespace {

constexpr const char* kConfigSchema = "prestige-rank-config/1";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::string unquote(std::string_view value, const std::string& path, std::size_t line) {
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        value = value.substr(1, value.size() - 2);
    }
    if (value.find('"') != std::string_view::npos) {
        throw ParseError(path, line, "embedded quotes are not supported in values");
    }
    return std::string(value);
}

std::string quote(const std::string& value) { return "\"" + value + "\""; }

struct RawConfig {
    std::map<std::string, std::pair<std::string, std::size_t>> entries;  // key -> (value, line)
    const std::string* path = nullptr;

    bool take(const std::string& key, std::string* out, std::size_t* line_out = nullptr) {
        auto it = entries.find(key);
        if (it == entries.end()) return false;
        *out = it->second.first;
        if (line_out != nullptr) *line_out = it->second.second;
        entries.erase(it);
        return true;
    }
};

int take_int(RawConfig& raw, const std::string& key, int fallback) {
    std::string text;
    std::size_t line = 0;
    if (!raw.take(key, &text, &line)) return fallback;
    auto value = parse_int(text);
    if (!value || *value < std::numeric_limits<int>::min() ||
        *value > std::numeric_limits<int>::max()) {
        throw ParseError(*raw.path, line, "invalid integer for " + key);
    }
    return static_cast<int>(*value);
}

double take_double(RawConfig& raw, const std::string& key, double fallback) {
    std::string text;
    std::size_t line = 0;
    if (!raw.take(key, &text, &line)) return fallback;
    auto value = parse_double(text);
    if (!value) throw ParseError(*raw.path, line, "invalid number for " + key);
    return *value;
}

bool take_bool(RawConfig& raw, const std::string& key, bool fallback) {
    std::string text;
    std::size_t line = 0;
    if (!raw.take(key, &text, &line)) return fallback;
    if (text == "true") return true;
    if (text == "false") return false;
    throw ParseError(*raw.path, line, "expected true or false for " + key);
}

std::string resolve_input(const std::string& value, const std::filesystem::path& base) {
    if (value.empty()) return value;
    std::filesystem::path p(value);
    if (p.is_absolute()) return value;
    return (base / p).lexically_normal().string();
}

}  // namespace

void RunConfig::validate() const {
    const bool document_inputs =
        !journals.empty() || !documents.empty() || !references.empty();
    if (document_inputs && preaggregated()) {
        throw Error("document-level and pre-aggregated inputs are mutually exclusive");
    }
    if (document_inputs) {
        if (journals.empty() || documents.empty() || references.empty()) {
            throw Error("document-level input needs journals, documents and references");
        }
    } else if (preaggregated()) {
        if (preagg_edges.empty() || preagg_stats.empty()) {
            throw Error("pre-aggregated input needs both preagg_edges and preagg_stats");
        }
        if (grouping != GroupingLevel::overall) {
            throw Error("grouping by subject area requires document-level inputs");
        }
    } else {
        throw Error("no input files configured");
    }
    if (target_year < 1 || target_year > 9999) {
        throw Error("target_year must be a 4-digit calendar year");
    }
    network.validate();
    prestige.validate();
    if (output_dir.empty()) throw Error("output_dir must be non-empty");
    if (horizon < 1) throw Error("horizon must be >= 1");
    if (top_k < 0) throw Error("top_k must be >= 0");
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");

    RawConfig raw;
    raw.path = &path;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        std::size_t eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(path, line_no, "expected key = value");
        }
        std::string key(trim(view.substr(0, eq)));
        if (key.empty()) throw ParseError(path, line_no, "empty key");
        std::string value = unquote(trim(view.substr(eq + 1)), path, line_no);
        if (!raw.entries.emplace(key, std::pair{value, line_no}).second) {
            throw ParseError(path, line_no, "duplicate key '" + key + "'");
        }
    }

    std::string schema;
    std::size_t schema_line = 0;
    if (!raw.take("schema", &schema, &schema_line)) {
        throw SchemaError(path + ": missing schema key (expected " +
                          std::string(kConfigSchema) + ")");
    }
    if (schema != kConfigSchema) {
        throw SchemaError(path, schema_line,
                          "unsupported schema '" + schema + "' (expected " +
                              std::string(kConfigSchema) + ")");
    }

    RunConfig config;
    raw.take("journals", &config.journals);
    raw.take("documents", &config.documents);
    raw.take("references", &config.references);
    raw.take("areas", &config.areas);
    raw.take("preagg_edges", &config.preagg_edges);
    raw.take("preagg_stats", &config.preagg_stats);
    config.target_year = take_int(raw, "target_year", config.target_year);
    config.network.window_years = take_int(raw, "window_years", config.network.window_years);
    config.network.self_cite_cap =
        take_double(raw, "self_cite_cap", config.network.self_cite_cap);
    {
        std::string scope;
        std::size_t line_of = 0;
        if (raw.take("art_scope", &scope, &line_of)) {
            if (scope == "window") {
                config.network.art_scope = NetworkParams::ArtScope::window;
            } else if (scope == "target_year") {
                config.network.art_scope = NetworkParams::ArtScope::target_year;
            } else {
                throw ParseError(path, line_of,
                                 "art_scope must be 'window' or 'target_year'");
            }
        }
    }
    config.prestige.d = take_double(raw, "d", config.prestige.d);
    config.prestige.e = take_double(raw, "e", config.prestige.e);
    config.prestige.convergence_tol =
        take_double(raw, "convergence_tol", config.prestige.convergence_tol);
    config.prestige.max_iterations =
        take_int(raw, "max_iterations", config.prestige.max_iterations);
    config.prestige.c = take_double(raw, "c", config.prestige.c);
    config.prestige.threads = take_int(raw, "threads", config.prestige.threads);
    raw.take("output_dir", &config.output_dir);
    {
        std::string grouping;
        std::size_t line_of = 0;
        if (raw.take("grouping_level", &grouping, &line_of)) {
            auto level = parse_grouping_level(grouping);
            if (!level) {
                throw ParseError(path, line_of,
                                 "grouping_level must be overall, area or specific_area");
            }
            config.grouping = *level;
        }
    }
    config.horizon = take_int(raw, "horizon", config.horizon);
    config.top_k = take_int(raw, "top_k", config.top_k);
    config.strict = take_bool(raw, "strict", config.strict);

    if (!raw.entries.empty()) {
        const auto& [key, where] = *raw.entries.begin();
        throw ParseError(path, where.second, "unknown key '" + key + "'");
    }

    std::filesystem::path base = std::filesystem::path(path).parent_path();
    config.journals = resolve_input(config.journals, base);
    config.documents = resolve_input(config.documents, base);
    config.references = resolve_input(config.references, base);
    config.areas = resolve_input(config.areas, base);
    config.preagg_edges = resolve_input(config.preagg_edges, base);
    config.preagg_stats = resolve_input(config.preagg_stats, base);
    return config;
}

std::string render_run_config(const RunConfig& config) {
    std::ostringstream out;
    out << "schema = " << quote(kConfigSchema) << "\n";
    if (!config.journals.empty()) out << "journals = " << quote(config.journals) << "\n";
    if (!config.documents.empty()) {
        out << "documents = " << quote(config.documents) << "\n";
    }
    if (!config.references.empty()) {
        out << "references = " << quote(config.references) << "\n";
    }
    if (!config.areas.empty()) out << "areas = " << quote(config.areas) << "\n";
    if (!config.preagg_edges.empty()) {
        out << "preagg_edges = " << quote(config.preagg_edges) << "\n";
    }
    if (!config.preagg_stats.empty()) {
        out << "preagg_stats = " << quote(config.preagg_stats) << "\n";
    }
    out << "target_year = " << config.target_year << "\n";
    out << "window_years = " << config.network.window_years << "\n";
    out << "self_cite_cap = " << format_double(config.network.self_cite_cap) << "\n";
    out << "art_scope = "
        << quote(config.network.art_scope == NetworkParams::ArtScope::window
                     ? "window"
                     : "target_year")
        << "\n";
    out << "d = " << format_double(config.prestige.d) << "\n";
    out << "e = " << format_double(config.prestige.e) << "\n";
    out << "convergence_tol = " << format_double(config.prestige.convergence_tol) << "\n";
    out << "max_iterations = " << config.prestige.max_iterations << "\n";
    out << "c = " << format_double(config.prestige.c) << "\n";
    out << "threads = " << config.prestige.threads << "\n";
    out << "output_dir = " << quote(config.output_dir) << "\n";
    out << "grouping_level = " << quote(std::string(to_string(config.grouping))) << "\n";
    out << "horizon = " << config.horizon << "\n";
    out << "top_k = " << config.top_k << "\n";
    out << "strict = " << (config.strict ? "true" : "false") << "\n";
    return out.str();
}

void save_run_config(const RunConfig& config, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << render_run_config(config);
}

}  // namespace prestige
