// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vireval/image.hpp"

namespace vireval {

// Normalized 1-D Gaussian tap weights: symmetric about the center, all
// positive, summing to 1.
struct GaussianKernel {
  double sigma = 0.0;
  int radius = 0;
  std::vector<double> weights;  // size 2 * radius + 1
};

// radius = ceil(3 * sigma); weights proportional to exp(-t^2 / (2 sigma^2)).
// Throws InvalidSigma for sigma <= 0 or NaN.
GaussianKernel make_kernel(double sigma);

// Same weights truncated at an explicit radius (used for the SSIM window).
GaussianKernel make_kernel(double sigma, int radius);

// Separable convolution (horizontal then vertical) with mirror border
// handling (edge sample not repeated). Grayscale input only; throws
// ChannelMismatch otherwise.
Image gaussian_blur(const Image& img, const GaussianKernel& kernel);

// Stride-2 sampling: output pixel (i, j) = input pixel (2i, 2j), output
// dimensions floor(w/2) x floor(h/2). Throws TooSmall below 2x2.
Image downsample(const Image& img);

struct PyramidParams {
  int octaves = 3;
  int layers = 5;  // per octave; layers - 1 blur steps
  double sigma = 1.0;
};

// Octave pyramid. Within an octave every layer has the same resolution and
// layer k+1 = gaussian_blur(layer k); the first layer of octave o+1 is the
// downsampled last layer of octave o. Octave 0 layer 0 is the raw input.
struct GaussianPyramid {
  std::vector<std::vector<Image>> octaves;
};

// Throws TooSmall when the image cannot support the requested octave count
// (floor(min_dim / 2^(octaves-1)) must be >= 2).
GaussianPyramid build_pyramid(const Image& img, const PyramidParams& params = {});

// Mean absolute difference between the first layers of octave
// `octave_index` of the two pyramids. Images must be grayscale and
// dimension-matched (DimensionMismatch otherwise).
double scale_loss(const Image& truth, const Image& candidate, int octave_index,
                  const PyramidParams& params = {});

// All per-octave losses of one pair in a single pass (one pyramid build per
// image instead of one per octave).
std::vector<double> scale_losses(const Image& truth, const Image& candidate,
                                 const PyramidParams& params = {});

struct PyramidLoss {
  std::vector<double> per_scale;  // one entry per octave
  std::vector<double> weights;
  double total = 0.0;  // sum of weights[i] * per_scale[i]
};

// Fixed-order mean of per-pair scale losses; bit-stable regardless of how
// the per-pair vectors were produced.
PyramidLoss combine_scale_losses(const std::vector<std::vector<double>>& per_pair,
                                 std::span<const double> weights);

// Dataset-mean per-scale loss over truth/candidate pairs. Weights length
// must equal the octave count. Throws EmptyDataset on an empty pair list.
PyramidLoss aggregate_pyramid_loss(
    std::span<const std::pair<Image, Image>> pairs,
    std::span<const double> weights, const PyramidParams& params = {});

}  // namespace vireval
