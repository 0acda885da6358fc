// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#include "prestige/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace prestige {

namespace {

LogLevel parse_env_level() {
    const char* raw = std::getenv("PRESTIGE_RANK_LOG");
    if (raw == nullptr) return LogLevel::warn;
    std::string v(raw);
    if (v == "error") return LogLevel::error;
    if (v == "warn") return LogLevel::warn;
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::warn;
}

LogLevel& level_ref() {
    static LogLevel level = parse_env_level();
    return level;
}

const char* tag(LogLevel level) {
    switch (level) {
        case LogLevel::error: return "error";
        case LogLevel::warn: return "warn";
        case LogLevel::info: return "info";
        case LogLevel::debug: return "debug";
    }
    return "?";
}

std::mutex log_mutex;

}  // namespace

LogLevel log_level() { return level_ref(); }

void set_log_level(LogLevel level) { level_ref() = level; }

void log_message(LogLevel level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::lock_guard<std::mutex> lock(log_mutex);
    std::cerr << "[" << tag(level) << "] " << message << "\n";
}

}  // namespace prestige
