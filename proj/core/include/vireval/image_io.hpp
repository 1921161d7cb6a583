// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "vireval/image.hpp"

namespace vireval {

struct ImageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Decodes a PNG or JPEG byte stream. 8-bit samples are mapped to [0,1] via
// s / 255; grayscale input yields 1 channel, color yields 3. Palette images
// are expanded to RGB and alpha channels are dropped. Throws DecodeError on
// malformed input or unsupported bit depth (only 8 bits per sample is
// supported).
Image decode_image(std::span<const std::uint8_t> bytes);

// Lossless PNG encoding; samples written as round(v * 255). 1-channel
// images are written as grayscale PNG.
std::vector<std::uint8_t> encode_png(const Image& img);

// Baseline JPEG encoding (lossy).
std::vector<std::uint8_t> encode_jpeg(const Image& img, int quality = 95);

Image load_image(const std::filesystem::path& path);

// Codec chosen from the file extension (.png, .jpg, .jpeg).
void save_image(const std::filesystem::path& path, const Image& img,
                int jpeg_quality = 95);

// Reads only enough of the file header to report dimensions; used for
// cheap dataset-wide dimension validation.
ImageSize peek_image_size(const std::filesystem::path& path);

}  // namespace vireval
