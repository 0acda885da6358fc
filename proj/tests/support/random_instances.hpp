// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <random>

#include "prestige/citation_network.hpp"
#include "prestige/corpus.hpp"

namespace testsupport {

struct RandomNetworkOptions {
    std::size_t n = 10;
    double dangling_fraction = 0.0;  // target share of journals without out-links
    std::uint64_t max_out_degree = 8;
    std::uint64_t max_count = 20;     // per-edge reference count
    std::uint64_t max_art = 50;       // per-journal primary items
    bool allow_self_loops = true;
    bool extra_out_of_window = true;  // total_refs above the windowed out-sum
    bool totals_equal_out_sum = false;  // force total_refs == windowed out-sum
};

/// Integer-weight journal network with the requested shape. Uncapped.
prestige::CitationNetwork::Raw random_raw(std::mt19937_64& rng,
                                          const RandomNetworkOptions& options);
prestige::CitationNetwork random_network(std::mt19937_64& rng,
                                         const RandomNetworkOptions& options);

/// Copy of a network with every edge weight and every total multiplied by k.
/// Art counts, ids and the applied-cap marker carry over unchanged.
prestige::CitationNetwork scale_network(const prestige::CitationNetwork& net, double k);

struct RandomCorpusOptions {
    std::size_t n_journals = 10;
    std::size_t n_documents = 200;
    std::size_t n_references = 600;
    int target_year = 2007;
    int year_spread = 6;          // publication years in [target - spread, target]
    double unresolved_prob = 0.15;
    bool with_areas = true;       // small area pool plus an unclassified share
};

/// Document-level corpus whose references always cite from a real document;
/// cited ids may point outside the corpus. At least one document lands in the
/// target year.
prestige::Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusOptions& options);

}  // namespace testsupport
