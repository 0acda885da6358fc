// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 prestige-rank contributors

#pragma once

namespace prestige {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace prestige
