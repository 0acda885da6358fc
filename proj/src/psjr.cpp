// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/psjr.hpp"

#include <cmath>

#include "prestige/errors.hpp"
#include "prestige/numeric.hpp"

namespace prestige {

void PrestigeParams::validate() const {
    if (!(d > 0.0)) throw Error("d must be > 0");
    if (!(e > 0.0)) throw Error("e must be > 0");
    if (!(d + e < 1.0)) throw Error("d + e must be < 1");
    if (!(convergence_tol > 0.0)) throw Error("convergence_tol must be > 0");
    if (max_iterations < 1) throw Error("max_iterations must be >= 1");
    if (!(c > 0.0)) throw Error("c must be > 0");
    if (threads < 1) throw Error("threads must be >= 1");
}

PrestigeVector init_prestige(std::size_t n) {
    if (n == 0) throw Error("cannot initialize prestige over zero journals");
    return PrestigeVector(n, 1.0 / static_cast<double>(n));
}

namespace {

struct TransferParts {
    std::vector<double> transfer;  // per cited journal, via windowed links
    double dangling_mass = 0.0;
    double transfer_sum = 0.0;
};

/// Gathers each journal's incoming prestige in ascending citing order and
/// reduces the scalars sequentially, so the result is independent of thread
/// count. Dangling journals transfer nothing, self-loops included.
TransferParts gather_transfer(const CitationNetwork& net, const PrestigeVector& v,
                              int threads) {
    const std::size_t n = net.size();
    std::vector<double> share(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (!net.is_dangling(j)) share[j] = v[j] / net.total_refs()[j];
    }

    TransferParts parts;
    parts.transfer.assign(n, 0.0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            CompensatedAccumulator acc;
            for (const NetworkEdge& e : net.in_edges(i)) {
                acc.add(e.weight * share[e.citing]);
            }
            parts.transfer[i] = acc.total();
        }
    });

    CompensatedAccumulator dangling;
    CompensatedAccumulator total;
    for (std::size_t j = 0; j < n; ++j) {
        if (net.is_dangling(j)) dangling.add(v[j]);
        total.add(parts.transfer[j]);
    }
    parts.dangling_mass = dangling.total();
    parts.transfer_sum = total.total();
    return parts;
}

std::vector<double> art_shares(const CitationNetwork& net) {
    const std::size_t n = net.size();
    std::uint64_t art_total = 0;
    for (std::uint64_t a : net.art_counts()) art_total += a;
    std::vector<double> shares(n);
    if (art_total == 0) {
        double uniform = 1.0 / static_cast<double>(n);
        for (double& s : shares) s = uniform;
        return shares;
    }
    for (std::size_t i = 0; i < n; ++i) {
        shares[i] = static_cast<double>(net.art_counts()[i]) /
                    static_cast<double>(art_total);
    }
    return shares;
}

}  // namespace

double correction_factor(const CitationNetwork& net, const PrestigeVector& prestige) {
    if (prestige.size() != net.size()) throw Error("prestige size does not match network");
    TransferParts parts = gather_transfer(net, prestige, 1);
    if (!(parts.transfer_sum > 0.0)) {
        throw DegenerateNetworkError(
            "every journal is dangling: no prestige flows through citation links");
    }
    return (1.0 - parts.dangling_mass) / parts.transfer_sum;
}

PrestigeVector iterate_once(const CitationNetwork& net, const PrestigeVector& prestige,
                            const PrestigeParams& params) {
    params.validate();
    if (prestige.size() != net.size()) throw Error("prestige size does not match network");

    const std::size_t n = net.size();
    const double base = (1.0 - params.d - params.e) / static_cast<double>(n);
    const std::vector<double> shares = art_shares(net);

    TransferParts parts = gather_transfer(net, prestige, params.threads);
    const bool degenerate = !(parts.transfer_sum > 0.0);
    const double cf =
        degenerate ? 0.0 : (1.0 - parts.dangling_mass) / parts.transfer_sum;

    PrestigeVector next(n);
    parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            double citation = shares[i] * parts.dangling_mass;
            if (!degenerate) citation += cf * parts.transfer[i];
            next[i] = base + params.e * shares[i] + params.d * citation;
        }
    });

    CompensatedAccumulator sum;
    for (double value : next) sum.add(value);
    const double total = sum.total();
    for (double& value : next) value /= total;
    return next;
}

PsjrResult compute_psjr(const CitationNetwork& net, const PrestigeParams& params) {
    params.validate();
    PsjrResult result;
    result.prestige = init_prestige(net.size());
    for (int it = 0; it < params.max_iterations; ++it) {
        PrestigeVector next = iterate_once(net, result.prestige, params);
        double delta = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            delta = std::max(delta, std::abs(next[i] - result.prestige[i]));
        }
        result.prestige = std::move(next);
        result.iterations_run = it + 1;
        result.final_delta = delta;
        if (delta <= params.convergence_tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

SjrScores normalize_to_sjr(const PrestigeVector& psjr, const CitationNetwork& net,
                           double c) {
    if (!(c > 0.0)) throw Error("c must be > 0");
    if (psjr.size() != net.size()) throw Error("prestige size does not match network");
    SjrScores scores;
    scores.c = c;
    scores.values.resize(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
        if (net.art_counts()[i] > 0) {
            scores.values[i] = c * psjr[i] / static_cast<double>(net.art_counts()[i]);
        }
    }
    return scores;
}

}  // namespace prestige
