#ifndef METERKIT_READING_HPP_
#define METERKIT_READING_HPP_

#include <optional>

#include "meterkit/core.hpp"
#include "meterkit/postproc.hpp"

namespace meterkit {

struct DialFrame {
  Point2 center;
  bool clockwise = true;
  // When present, the zero scale is the blob nearest this point; otherwise
  // the blob whose sweep toward the other one is smaller is taken as zero.
  std::optional<Point2> zero_hint;
};

struct ReadingResult {
  double value = 0.0;
  double alpha1 = 0.0;   // degrees, pointer sweep from the zero scale
  double alpha2 = 0.0;   // degrees, zero scale to key scale
  double num_rec = 0.0;  // key number
  HoughLine pointer;
  Point2 zero_scale;
  Point2 key_scale;
};

// Angle swept from ray(center->from) to ray(center->to) in the given
// direction, degrees in [0, 360), y-down pixel frame.
double SweepAngle(const Point2& center, const Point2& from, const Point2& to,
                  bool clockwise);

// alpha1 / alpha2 * num_rec.
double ComputeReading(double alpha1, double alpha2, double num_rec);

// Full inference chain: binarize both maps at 0.5, thin the pointer mask,
// Hough line for the pointer, blob centroids for the scales, then the angle
// method.
ReadingResult ReadMeter(const ScoreMap& pointer_map,
                        const ScoreMap& key_scale_map, double num_rec,
                        const DialFrame& frame, double tau = 0.5,
                        int hough_theta_bins = 180);

}  // namespace meterkit

#endif  // METERKIT_READING_HPP_
