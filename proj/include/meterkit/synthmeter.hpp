#ifndef METERKIT_SYNTHMETER_HPP_
#define METERKIT_SYNTHMETER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meterkit/core.hpp"
#include "meterkit/geometry.hpp"

namespace meterkit {

struct MeterSpec {
  int image_size = 320;        // square frame, pixels
  double dial_radius = 110.0;  // pixels, < image_size / 2
  double zero_angle = 135.0;   // degrees, y-down clockwise from +x
  double span_angle = 270.0;   // degrees in (0, 360), zero -> key, clockwise
  double pointer_fraction = 0.5;  // true reading / key number
  std::string key_number = "3.0";
  std::optional<Homography> distortion;  // aligned frame -> detected frame
  std::uint64_t seed = 0;                // texture noise
};

struct MeterAnnotation {
  Point2 dial_center;
  Point2 zero_scale;
  Point2 key_scale;
  double pointer_angle = 0.0;  // degrees
  std::string key_number;
  double true_reading = 0.0;
  std::array<Correspondence, 4> correspondences{};
  QuadOffsets offsets;
  Homography h_gt;
};

struct SynthScene {
  ImageBuffer image;
  ScoreMap pointer_map_gt;
  ScoreMap key_scale_map_gt;
  MeterAnnotation annotation;
};

// Ranges are inclusive [lo, hi]; key numbers are drawn uniformly from the
// list; corner jitter is sampled within +-jitter_frac * image_size.
struct SpecConstraints {
  int image_size_min = 320, image_size_max = 320;
  double radius_frac_min = 0.28, radius_frac_max = 0.36;
  double zero_angle_min = 0.0, zero_angle_max = 360.0;
  double span_min = 250.0, span_max = 330.0;
  double fraction_min = 0.35, fraction_max = 1.0;
  std::vector<std::string> key_numbers = {"1.6", "2.5", "3.0",
                                          "4.0", "6",   "10"};
  double jitter_frac = 0.15;
  bool distort = false;
};

SynthScene Render(const MeterSpec& spec);

MeterSpec RandomSpec(std::uint64_t seed, const SpecConstraints& constraints);

}  // namespace meterkit

#endif  // METERKIT_SYNTHMETER_HPP_
