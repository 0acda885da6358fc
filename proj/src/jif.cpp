// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/jif.hpp"

#include "prestige/errors.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

JifScores compute_jif3y(const CitationNetwork& net) {
    if (net.applied_cap()) {
        throw Error("JIF(3y) requires the uncapped network; this one was capped at " +
                    format_double(*net.applied_cap()));
    }
    JifScores scores;
    scores.values.resize(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        if (net.art_counts()[i] == 0) continue;
        CompensatedAccumulator received;
        for (const NetworkEdge& e : net.in_edges(i)) received.add(e.weight);
        scores.values[i] = received.total() / static_cast<double>(net.art_counts()[i]);
    }
    return scores;
}

}  // namespace prestige
