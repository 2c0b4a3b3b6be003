#include "meterkit/reading.hpp"

#include <cmath>
#include <numbers>

namespace meterkit {
namespace {

double RayAngleDeg(const Point2& center, const Point2& p) {
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  if (dx == 0.0 && dy == 0.0) {
    throw Error(ErrorKind::kDegenerateRay, "ray endpoint coincides with center");
  }
  // atan2 grows in the visually clockwise direction of the y-down frame.
  double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 360.0;
  return deg;
}

}  // namespace

double SweepAngle(const Point2& center, const Point2& from, const Point2& to,
                  bool clockwise) {
  const double a_from = RayAngleDeg(center, from);
  const double a_to = RayAngleDeg(center, to);
  double sweep = clockwise ? a_to - a_from : a_from - a_to;
  sweep = std::fmod(sweep, 360.0);
  if (sweep < 0.0) sweep += 360.0;
  return sweep;
}

double ComputeReading(double alpha1, double alpha2, double num_rec) {
  if (!(alpha2 > 0.0)) {
    throw Error(ErrorKind::kZeroSpan, "scale span must be positive");
  }
  if (alpha1 < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "alpha1 must be nonnegative");
  }
  return alpha1 / alpha2 * num_rec;
}

ReadingResult ReadMeter(const ScoreMap& pointer_map,
                        const ScoreMap& key_scale_map, double num_rec,
                        const DialFrame& frame, double tau,
                        int hough_theta_bins) {
  const BinaryMask pointer_mask = Binarize(pointer_map, tau);
  if (pointer_mask.count() < 2) {
    throw Error(ErrorKind::kEmptyPointer, "pointer map is empty after thresholding");
  }
  const BinaryMask skeleton = Thin(pointer_mask);
  const HoughLine line = HoughLineDetect(skeleton, hough_theta_bins);

  const auto scale_blobs = ConnectedBlobs(Binarize(key_scale_map, tau));
  if (scale_blobs.size() < 2) {
    throw Error(ErrorKind::kInsufficientScales,
                "key scale map yields fewer than 2 blobs");
  }
  Point2 blob_a = scale_blobs[0].centroid;
  Point2 blob_b = scale_blobs[1].centroid;

  Point2 zero_scale, key_scale;
  if (frame.zero_hint) {
    const double da = std::hypot(blob_a.x - frame.zero_hint->x,
                                 blob_a.y - frame.zero_hint->y);
    const double db = std::hypot(blob_b.x - frame.zero_hint->x,
                                 blob_b.y - frame.zero_hint->y);
    zero_scale = da <= db ? blob_a : blob_b;
    key_scale = da <= db ? blob_b : blob_a;
  } else {
    const double ab = SweepAngle(frame.center, blob_a, blob_b, frame.clockwise);
    zero_scale = ab <= 180.0 ? blob_a : blob_b;
    key_scale = ab <= 180.0 ? blob_b : blob_a;
  }

  // Tip side: the half-line, anchored at the dial center, holding the larger
  // share of skeleton pixels.
  const Point2 dir{-std::sin(line.theta), std::cos(line.theta)};
  long vote = 0;
  for (int y = 0; y < skeleton.height(); ++y) {
    for (int x = 0; x < skeleton.width(); ++x) {
      if (!skeleton.at(x, y)) continue;
      const double s = (x - frame.center.x) * dir.x + (y - frame.center.y) * dir.y;
      if (s > 0.0) ++vote;
      else if (s < 0.0) --vote;
    }
  }
  const double sign = vote >= 0 ? 1.0 : -1.0;
  const Point2 tip{frame.center.x + sign * dir.x, frame.center.y + sign * dir.y};

  double alpha1 = SweepAngle(frame.center, zero_scale, tip, frame.clockwise);
  const double alpha2 =
      SweepAngle(frame.center, zero_scale, key_scale, frame.clockwise);
  // A pointer resting on the zero scale can rasterize a hair before it,
  // which would otherwise read as a near-full sweep.
  if (alpha1 > alpha2 && 360.0 - alpha1 < alpha1 - alpha2) alpha1 = 0.0;

  ReadingResult result;
  result.alpha1 = alpha1;
  result.alpha2 = alpha2;
  result.num_rec = num_rec;
  result.value = ComputeReading(alpha1, alpha2, num_rec);
  result.pointer = line;
  result.zero_scale = zero_scale;
  result.key_scale = key_scale;
  return result;
}

}  // namespace meterkit
