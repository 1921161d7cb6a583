// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace vireval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vireval
