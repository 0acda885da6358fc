// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <optional>
#include <vector>

#include "prestige/citation_network.hpp"

namespace prestige {

/// Per-journal 3-year impact factor aligned with CitationNetwork::journal_ids();
/// undefined when the journal published no primary items in the window.
struct JifScores {
    std::vector<std::optional<double>> values;
};

/// jif3y[i] = windowed citations received / primary items in the window.
/// Self-citations count in full, so the network must be uncapped; passing a
/// capped network is an error.
JifScores compute_jif3y(const CitationNetwork& net);

}  // namespace prestige
