// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vireval {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// image decoding / encoding
class DecodeError : public Error {
 public:
  using Error::Error;
};
class InvalidDimension : public Error {
 public:
  using Error::Error;
};
class CropTooLarge : public Error {
 public:
  using Error::Error;
};
class ChannelMismatch : public Error {
 public:
  using Error::Error;
};

// pyramid
class InvalidSigma : public Error {
 public:
  using Error::Error;
};
class TooSmall : public Error {
 public:
  using Error::Error;
};

// shared by the metric modules
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class EmptyDataset : public Error {
 public:
  using Error::Error;
};
class ImageTooSmall : public Error {
 public:
  using Error::Error;
};

// detection evaluation
class NoGroundTruth : public Error {
 public:
  using Error::Error;
};
class EmptyGroundTruth : public Error {
 public:
  using Error::Error;
};

// file format parsing
class ParseError : public Error {
 public:
  using Error::Error;
};
class InvalidBox : public Error {
 public:
  using Error::Error;
};
class InvalidConfidence : public Error {
 public:
  using Error::Error;
};
class OutOfRange : public Error {
 public:
  using Error::Error;
};
class EmptySeries : public Error {
 public:
  using Error::Error;
};

// dataset pairing
class MissingPair : public Error {
 public:
  using Error::Error;
};
class MissingAnnotation : public Error {
 public:
  using Error::Error;
};
class MissingCandidate : public Error {
 public:
  using Error::Error;
};

}  // namespace vireval
