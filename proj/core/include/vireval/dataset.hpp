// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vireval/detection.hpp"
#include "vireval/image.hpp"
#include "vireval/image_io.hpp"

namespace vireval {

// ---------------------------------------------------------------------------
// Dataset layout and index

struct SplitLayout {
  std::string split;  // e.g. "train", "test"
  std::filesystem::path visible_dir;
  std::filesystem::path infrared_dir;
  std::filesystem::path annotation_dir;  // empty = no annotations expected
};

struct DatasetLayout {
  std::vector<SplitLayout> splits;

  // visible/{train,test}, infrared/{train,test}, shared Annotations/.
  static DatasetLayout llvip_default();

  // Key-value file, one `split.role = path` assignment per line, e.g.
  //   train.visible = visible/train
  //   train.infrared = infrared/train
  //   train.annotations = Annotations
  // '#' starts a comment. Throws ParseError on malformed lines.
  static DatasetLayout parse_file(const std::filesystem::path& file);
};

enum class IssueKind {
  missing_pair,
  missing_annotation,
  dimension_mismatch,
  missing_candidate,
  invalid_box,
  invalid_confidence,
  out_of_range,
  parse_error,
};

// Spelled exactly as reported to users: "MissingPair", "InvalidBox", ...
const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

// MissingPair / MissingCandidate may be downgraded to warnings in lenient
// mode; every other kind is always an error.
bool lenient_downgradable(IssueKind kind);

struct DatasetEntry {
  std::string image_id;  // filename stem shared by the pair
  std::filesystem::path visible_path;
  std::filesystem::path infrared_path;
  std::filesystem::path annotation_path;  // may be empty
  std::string split;
  int width = 0;
  int height = 0;
};

struct DatasetIndex {
  std::filesystem::path root;
  std::vector<DatasetEntry> entries;  // sorted by image_id

  std::map<std::string, std::size_t> split_counts() const;
};

struct ScanResult {
  DatasetIndex index;
  std::vector<ValidationIssue> issues;
};

// Indexes all visible/infrared pairs matched by filename stem, checks that
// each pair's dimensions agree (via header peeks) and that annotations
// exist. Incomplete or mismatched pairs are excluded from the index and
// reported as issues. Deterministic: entries sorted by image_id. `jobs`
// bounds the threads used for dimension peeking.
ScanResult scan_dataset(const std::filesystem::path& root,
                        const DatasetLayout& layout, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Annotation and prediction file formats

// VOC-style markup: one GroundTruthBox per <object>, coordinates from
// <bndbox> xmin/ymin/xmax/ymax, class from <name>. Throws ParseError on
// malformed markup, InvalidBox (with the object index) on degenerate boxes.
std::vector<GroundTruthBox> parse_voc_annotation(std::string_view xml_text,
                                                 const std::string& image_id = "");

std::string write_voc_annotation(std::span<const GroundTruthBox> boxes,
                                 int img_w, int img_h,
                                 const std::string& filename);

// YOLO text labels: one `class cx cy w h` line per box, normalized values
// in [0,1], denormalized to corner coordinates against (img_w, img_h).
// Class indices are mapped through `class_names`. Throws ParseError,
// OutOfRange (value outside [0,1]) or InvalidBox, each naming the line.
std::vector<GroundTruthBox> parse_yolo_labels(
    std::string_view text, int img_w, int img_h,
    std::span<const std::string> class_names, const std::string& image_id = "");

struct PredictionSet {
  std::string run_name;
  std::optional<int> epoch;
  std::vector<Detection> detections;  // file order
  std::map<std::string, std::vector<std::size_t>> by_image;  // indices

  std::size_t size() const noexcept { return detections.size(); }
};

// One detection per line: `<image_id> <class> <confidence> <x1> <y1> <x2>
// <y2>`, single-space separated, '#'-prefixed lines ignored. Throws
// ParseError / InvalidConfidence / InvalidBox, each naming the line number.
PredictionSet parse_predictions(std::string_view text,
                                const std::string& run_name = "");

enum class GtFormat { voc, yolo };

struct GroundTruthSet {
  std::vector<GroundTruthBox> boxes;
  std::vector<std::string> image_ids;  // sorted stems seen in the directory
  std::vector<ValidationIssue> issues;
};

// Parses every annotation file in `dir` (*.xml for voc, *.txt for yolo),
// image_id = filename stem. Parse failures are collected per file rather
// than aborting the scan. `yolo_image_size` is required for yolo input.
GroundTruthSet load_ground_truth_dir(
    const std::filesystem::path& dir, GtFormat format,
    std::span<const std::string> class_names,
    std::optional<ImageSize> yolo_image_size = std::nullopt);

// ---------------------------------------------------------------------------
// Truth/candidate pairing for translation metrics

struct PairPlan {
  std::string image_id;
  std::filesystem::path truth_path;      // ground-truth infrared image
  std::filesystem::path candidate_path;  // translated candidate
};

struct PairingPlan {
  std::vector<PairPlan> pairs;  // sorted by image_id
  std::vector<ValidationIssue> issues;
};

// Matches candidate images (named by image_id) against the index's
// infrared images for one split ("train", "test" or "all"). Candidates at
// a different resolution are rejected (no silent resizing); when
// `expected_size` is set it overrides the per-entry dimensions (used when
// the truth image is preprocessed before comparison).
PairingPlan plan_candidate_pairs(const DatasetIndex& index,
                                 std::string_view split,
                                 const std::filesystem::path& candidate_dir,
                                 std::optional<ImageSize> expected_size = std::nullopt);

// Decodes one planned pair, grayscale-converted, and verifies the
// dimensions match (DimensionMismatch otherwise). Returned as
// (truth, candidate).
std::pair<Image, Image> load_pair(const PairPlan& plan);

struct LoadedPairs {
  std::vector<std::pair<Image, Image>> pairs;  // (truth, candidate)
  std::vector<ValidationIssue> issues;
};

// Eagerly loads every planned pair; intended for small datasets and tests.
// The CLI streams pairs instead of holding them all in memory.
LoadedPairs pair_images(const DatasetIndex& index, std::string_view split,
                        const std::filesystem::path& candidate_dir);

}  // namespace vireval
