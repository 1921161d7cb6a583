// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "vireval/series.hpp"

namespace vireval {

// Renders one 800x500 chart panel per metric name present across the runs,
// stacked vertically into a single self-contained SVG document. Each run is
// a distinct colored polyline with a legend entry; axes are labeled epoch
// vs value. Output bytes are deterministic for identical input. Throws
// EmptySeries when no run carries any data.
std::string render_curves_svg(std::span<const RunSeries> runs);

}  // namespace vireval
