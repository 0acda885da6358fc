// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <string>

#include "prestige/analytics.hpp"
#include "prestige/citation_network.hpp"
#include "prestige/psjr.hpp"

namespace prestige {

/// Every knob of a reproducible run. Loaded from a flat key = value file
/// (TOML-compatible: strings quoted, numbers and booleans bare). Input paths
/// in the file are resolved against the config file's directory; output_dir
/// is resolved against the working directory.
struct RunConfig {
    // document-level inputs
    std::string journals;
    std::string documents;
    std::string references;
    std::string areas;  // optional hierarchy table

    // journal-level alternative, bypasses the document layer
    std::string preagg_edges;
    std::string preagg_stats;

    int target_year = 0;
    NetworkParams network;
    PrestigeParams prestige;
    std::string output_dir = "out";
    GroupingLevel grouping = GroupingLevel::overall;
    int horizon = 12;
    int top_k = 10;
    bool strict = false;  // non-convergence becomes an error (exit 1)

    bool preaggregated() const { return !preagg_edges.empty() || !preagg_stats.empty(); }

    /// Cross-field checks: exactly one input mode, module parameter bounds,
    /// grouping feasibility. Throws Error.
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

/// Strict parser: unknown or duplicate keys and schema mismatches are
/// ParseErrors with line numbers. Relative input paths come back resolved.
RunConfig load_run_config(const std::string& path);

/// Canonical text form; save followed by load reproduces the struct exactly.
std::string render_run_config(const RunConfig& config);
void save_run_config(const RunConfig& config, const std::string& path);

}  // namespace prestige
