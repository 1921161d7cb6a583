// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <span>
#include <vector>

namespace vireval {

// Owned raster of normalized intensities in [0,1], row-major and
// channel-interleaved. 1 channel (grayscale) or 3 channels (RGB).
// Immutable by convention after construction; all image operations
// return new values.
class Image {
 public:
  Image() = default;

  // Zero-filled image. Throws InvalidDimension / ChannelMismatch on bad
  // arguments.
  Image(int width, int height, int channels);

  // Takes ownership of `data`; data.size() must equal
  // width * height * channels.
  Image(int width, int height, int channels, std::vector<float> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t sample_count() const noexcept { return data_.size(); }

  float at(int x, int y, int c = 0) const noexcept {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_ && c < channels_);
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  float& at(int x, int y, int c = 0) noexcept {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_ && c < channels_);
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::span<const float> samples() const noexcept { return data_; }
  std::span<float> samples() noexcept { return data_; }

  friend bool operator==(const Image& a, const Image& b) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

// BT.601 luma conversion (0.299 R + 0.587 G + 0.114 B), clamped to [0,1].
// Grayscale input is returned unchanged; idempotent.
Image to_grayscale(const Image& img);

// Bilinear resample to (new_width, new_height) with pixel-center alignment:
// source coordinate = (i + 0.5) * scale - 0.5, clamped to the image.
// Throws InvalidDimension when a target dimension is not positive.
Image resize(const Image& img, int new_width, int new_height);

// Centered crop_w x crop_h window; offset = floor((dim - crop) / 2) per
// axis. Throws CropTooLarge when the window exceeds the image.
Image center_crop(const Image& img, int crop_w, int crop_h);

// Deterministic evaluation preprocessing chain: resize to
// (target_w, target_h), then center-crop to crop x crop.
Image preprocess(const Image& img, int target_w = 320, int target_h = 256,
                 int crop = 256);

}  // namespace vireval
