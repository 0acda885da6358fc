// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <vector>

#include "prestige/citation_network.hpp"

namespace testsupport {

struct DenseOracleResult {
    std::vector<double> psjr;
    int outer_iterations = 0;
    double residual = 0.0;  // max-abs change of the final outer step
};

/// Independent fixed-point solve of the prestige equations on a dense matrix.
/// Each outer step freezes the dangling mass and the correction factor at
/// their current values and solves the resulting linear system directly with
/// an LU factorization; the two scalars are then recomputed from the solution
/// until they stop moving. Shares no code path with the iterative solver.
DenseOracleResult dense_fixed_point(const prestige::CitationNetwork& net, double d,
                                    double e, double tol = 1e-14, int max_outer = 400);

}  // namespace testsupport
