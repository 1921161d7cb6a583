// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vireval {

struct SeriesPoint {
  int epoch = 0;
  double value = 0.0;
};

// Per-run metric trajectories; epochs strictly increasing per metric and
// all values finite.
struct RunSeries {
  std::string run_name;
  std::map<std::string, std::vector<SeriesPoint>> by_metric;
};

// CSV with exact header `epoch,metric,value`. Throws ParseError (naming
// the line) on malformed rows, non-finite values or out-of-order epochs,
// EmptySeries when the file holds no data rows.
RunSeries parse_series_csv(std::string_view text, const std::string& run_name);

}  // namespace vireval
