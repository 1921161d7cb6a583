// Copyright 2026 The vireval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vireval {

// Axis-aligned box in continuous pixel coordinates with strictly positive
// area. Construction rejects degenerate boxes (InvalidBox).
struct Box {
  double x1, y1, x2, y2;

  Box(double x1, double y1, double x2, double y2);

  double area() const noexcept { return (x2 - x1) * (y2 - y1); }

  friend bool operator==(const Box&, const Box&) = default;
};

struct Detection {
  std::string image_id;
  std::string class_label;
  double confidence = 0.0;  // in [0,1]
  Box box;
};

struct GroundTruthBox {
  std::string image_id;
  std::string class_label;
  Box box;
};

// Intersection area / union area; 0 for disjoint boxes, 1 iff identical.
double iou(const Box& a, const Box& b) noexcept;

// Greedy non-maximal suppression over detections of one image and class:
// repeatedly keep the highest-confidence remaining detection and discard
// every remaining one whose IoU with it strictly exceeds the threshold.
// Output sorted by descending confidence, ties kept in input order.
std::vector<Detection> nms(std::vector<Detection> dets, double iou_threshold);

struct DetectionMatch {
  Detection detection;
  bool true_positive = false;
};

// Greedy matching of detections (descending confidence, stable) against
// ground truths of the same image and class: each detection takes the
// unmatched ground truth with the highest IoU if that IoU strictly exceeds
// the threshold; each ground truth is consumed at most once. IoU ties are
// broken by ground-truth input order.
std::vector<DetectionMatch> match_detections(
    std::vector<Detection> dets, const std::vector<GroundTruthBox>& gts,
    double iou_threshold);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

// precision = TP / (TP + FP), 1.0 when there are no detections;
// recall = TP / total_gt, 1.0 when total_gt == 0.
PrecisionRecall precision_recall(const std::vector<bool>& tp_flags,
                                 std::size_t total_gt);

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

// Cumulative precision/recall walk in descending-confidence order; recall
// is non-decreasing along the list.
struct PRCurve {
  std::vector<PrPoint> points;
  std::vector<double> confidence_thresholds;  // matching list
};

enum class ApInterpolation {
  coco101,   // mean over 101 recall thresholds {0, 0.01, ..., 1}
  allpoint,  // exact area under the precision envelope
};

struct ApResult {
  double ap = 0.0;
  PRCurve curve;
};

// Average precision for one class at one IoU threshold over all images.
// Throws NoGroundTruth when `gts` is empty (AP undefined).
ApResult average_precision(const std::vector<Detection>& dets,
                           const std::vector<GroundTruthBox>& gts,
                           double iou_threshold, ApInterpolation interpolation);

std::vector<double> coco_iou_thresholds();  // {0.50, 0.55, ..., 0.95}

struct EvalOptions {
  std::vector<double> iou_thresholds = coco_iou_thresholds();
  double conf_cutoff = 0.25;  // headline precision/recall cutoff
  ApInterpolation interpolation = ApInterpolation::coco101;
};

struct ClassEval {
  std::string class_label;
  std::size_t gt_count = 0;
  std::vector<double> ap;        // one entry per IoU threshold
  std::vector<PRCurve> curves;   // matching the thresholds
};

struct DetectionEvalResult {
  std::vector<double> thresholds;
  std::vector<ClassEval> per_class;          // classes with >= 1 ground truth,
                                             // sorted by label
  std::vector<std::string> skipped_classes;  // predicted classes without any
                                             // ground truth (AP undefined)
  std::vector<double> map_per_threshold;
  double map_50 = 0.0;
  double map_50_95 = 0.0;  // mean of map_per_threshold
  double precision = 0.0;  // at IoU 0.5, detections with
  double recall = 0.0;     // confidence >= conf_cutoff
  double conf_cutoff = 0.0;
};

// Full evaluation across classes and IoU thresholds. Throws
// EmptyGroundTruth when there is no ground truth at all. Deterministic:
// identical inputs produce bit-identical results.
DetectionEvalResult evaluate_detections(const std::vector<Detection>& dets,
                                        const std::vector<GroundTruthBox>& gts,
                                        const EvalOptions& options = {});

}  // namespace vireval
