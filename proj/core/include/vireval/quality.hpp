// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vireval/image.hpp"

namespace vireval {

// Mean over all samples of (a - b)^2. Equal dimensions and channel counts
// required (DimensionMismatch otherwise).
double mse(const Image& a, const Image& b);

// 10 * log10(MAX^2 / mse) with MAX = 1, i.e. -10 * log10(mse). Returns
// +infinity when mse == 0.
double psnr(const Image& a, const Image& b);

struct SsimParams {
  int window = 11;     // odd window size
  double sigma = 1.5;  // Gaussian window sigma
  double k1 = 0.01;
  double k2 = 0.03;
};

// Mean local structural similarity over all fully-interior window
// positions, Gaussian-weighted local statistics, unit dynamic range.
// Color inputs are converted to grayscale first. Throws ImageTooSmall when
// the window does not fit.
double ssim(const Image& a, const Image& b, const SsimParams& params = {});

struct PairQuality {
  double mse = 0.0;
  double psnr = 0.0;  // +infinity when mse == 0
  double ssim = 0.0;
};

PairQuality compute_pair_quality(const Image& truth, const Image& candidate,
                                 const SsimParams& params = {});

struct QualityResult {
  double mse = 0.0;
  double psnr = 0.0;  // mean of finite per-pair values; +infinity if none
  double ssim = 0.0;
  int psnr_excluded = 0;  // pairs with mse == 0, left out of the psnr mean
};

// Fixed-order mean of per-pair results. Pairs with infinite PSNR are
// excluded from the PSNR mean and counted in psnr_excluded.
QualityResult combine_quality(std::span<const PairQuality> per_pair);

// Throws EmptyDataset on an empty pair list.
QualityResult aggregate_quality(std::span<const std::pair<Image, Image>> pairs,
                                const SsimParams& params = {});

}  // namespace vireval
