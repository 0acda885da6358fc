// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace prestige {

// CLI exit code contract: 0 success, 1 computational failure, 2 usage/IO/input.
inline constexpr int kExitCompute = 1;
inline constexpr int kExitUsage = 2;

class Error : public std::runtime_error {
public:
    explicit Error(std::string message, int exit_code = kExitUsage)
        : std::runtime_error(std::move(message)), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// Missing, unreadable or unwritable files.
class IoError : public Error {
public:
    explicit IoError(std::string message) : Error(std::move(message)) {}
};

/// Malformed input row; message carries "<source>:<line>".
class ParseError : public Error {
public:
    explicit ParseError(std::string message) : Error(std::move(message)) {}
    ParseError(const std::string& source, std::size_t line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message) {}
};

/// Header or schema-version mismatch between a file and its loader.
class SchemaError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A key that must resolve (citing document, journal id) does not.
class ReferentialError : public Error {
public:
    explicit ReferentialError(std::string message) : Error(std::move(message)) {}
    ReferentialError(const std::string& source, std::size_t line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message) {}
};

class DuplicateKeyError : public Error {
public:
    explicit DuplicateKeyError(std::string message) : Error(std::move(message)) {}
    DuplicateKeyError(const std::string& source, std::size_t line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message) {}
};

/// Target year has no documents to build a network from.
class EmptyYearError : public Error {
public:
    explicit EmptyYearError(std::string message) : Error(std::move(message)) {}
};

/// Every journal is dangling: no prestige can flow through citation links.
class DegenerateNetworkError : public Error {
public:
    explicit DegenerateNetworkError(std::string message)
        : Error(std::move(message), kExitCompute) {}
};

/// Raised by strict runs when the iteration hits max_iterations unconverged.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(std::string message)
        : Error(std::move(message), kExitCompute) {}
};

class UsageError : public Error {
public:
    explicit UsageError(std::string message) : Error(std::move(message)) {}
};

/// Wraps a module error with the pipeline stage it escaped from; preserves
/// the original exit code.
class StagedError : public Error {
public:
    StagedError(std::string stage, const Error& cause)
        : Error(stage + ": " + cause.what(), cause.exit_code()), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace prestige
