// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace prestige {

/// Neumaier-compensated accumulator. Used for every scalar reduction that
/// feeds the iteration so sums are accurate to a few ulp; always applied in
/// a fixed sequential order, which keeps results independent of thread count.
class CompensatedAccumulator {
public:
    void add(double value) {
        double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    double total() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_sum(std::span<const double> values);

/// Runs fn(begin, end) over contiguous chunks of [0, n). Callers must write
/// disjoint outputs per index and read only shared immutable state; under
/// that contract the result is identical for any worker count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

/// Shortest-of-17-significant-digits rendering; round-trips bit-exactly
/// through parse_double. Locale independent.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

/// FNV-1a 64-bit content hash, reported in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace prestige
