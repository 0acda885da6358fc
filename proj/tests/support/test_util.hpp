// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace testsupport {

/// Bundled fixture directory, from PRESTIGE_RANK_FIXTURES or "fixtures".
std::string fixture_dir();

/// Self-deleting directory under the system temp root.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::string& str() const { return path_; }
    std::string file(const std::string& name) const;

private:
    std::string path_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Raw-engine draws instead of std distributions, so sequences are identical
// on every standard library.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);
double unit(std::mt19937_64& rng);

}  // namespace testsupport
