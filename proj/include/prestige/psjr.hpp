// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <optional>
#include <vector>

#include "prestige/citation_network.hpp"

namespace prestige {

struct PrestigeParams {
    double d = 0.9;               // citation-prestige weight
    double e = 0.0999;            // publication-prestige weight
    double convergence_tol = 1e-9;  // max-abs componentwise change
    int max_iterations = 200;
    double c = 1.0;               // Phase-2 scale constant
    int threads = 1;

    void validate() const;
    bool operator==(const PrestigeParams&) const = default;
};

/// Per-journal prestige aligned with CitationNetwork::journal_ids(); sums to 1.
using PrestigeVector = std::vector<double>;

struct PsjrResult {
    PrestigeVector prestige;
    int iterations_run = 0;
    double final_delta = 0.0;
    bool converged = false;
};

/// Per-journal size-independent scores; entries with Art = 0 are undefined
/// and stay nullopt, never 0.
struct SjrScores {
    std::vector<std::optional<double>> values;
    double c = 1.0;
};

/// Uniform start vector, all entries 1/n.
PrestigeVector init_prestige(std::size_t n);

/// CF = (1 - dangling mass) / (sum of prestige transferred through windowed
/// links). Dangling journals contribute to neither side of the transfer.
/// Throws DegenerateNetworkError when every journal is dangling.
double correction_factor(const CitationNetwork& net, const PrestigeVector& prestige);

/// One update of the three-component prestige map (minimum share, publication
/// share, citation transfer with CF plus Art-proportional dangling
/// redistribution), renormalized to sum 1. On an all-dangling network the
/// transfer term is dropped and all citation prestige flows via the dangling
/// term.
PrestigeVector iterate_once(const CitationNetwork& net, const PrestigeVector& prestige,
                            const PrestigeParams& params);

/// Power iteration from the uniform vector until the max-abs componentwise
/// change drops to convergence_tol or max_iterations is exhausted.
/// Non-convergence is reported, not thrown.
PsjrResult compute_psjr(const CitationNetwork& net, const PrestigeParams& params);

/// Phase 2: sjr[i] = c * psjr[i] / Art[i]; Art = 0 entries are undefined.
SjrScores normalize_to_sjr(const PrestigeVector& psjr, const CitationNetwork& net,
                           double c);

}  // namespace prestige
