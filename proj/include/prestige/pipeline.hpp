// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prestige/citation_network.hpp"
#include "prestige/corpus.hpp"
#include "prestige/run_config.hpp"

namespace prestige {

/// Loads the document-level corpus named by the config. Error when the config
/// is pre-aggregated.
Corpus load_configured_corpus(const RunConfig& config);

/// Builds (or loads, for pre-aggregated input) the uncapped network.
/// Pass the corpus when one is already loaded; nullptr loads it on demand
/// for document-level configs.
CitationNetwork build_uncapped_network(const RunConfig& config, const Corpus* corpus);

struct PipelineOutcome {
    bool converged = false;
    int iterations_run = 0;
    double final_delta = 0.0;
    std::size_t journal_count = 0;
    std::string output_dir;
    std::vector<std::string> artifacts;  // paths relative to output_dir
};

/// Full run: ingest, network, prestige, baseline, analytics, artifact
/// files plus a manifest with content hashes. Module errors are rethrown as
/// StagedError naming the stage they escaped from. With config.strict a
/// non-converged iteration is an error (exit code 1).
PipelineOutcome run_pipeline(const RunConfig& config);

}  // namespace prestige
