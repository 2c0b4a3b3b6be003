#ifndef METERKIT_GEOMETRY_HPP_
#define METERKIT_GEOMETRY_HPP_

#include <array>

#include "meterkit/core.hpp"

namespace meterkit {

// 3x3 projective map, stored row-major. The canonical representative of the
// projective equivalence class has Frobenius norm 1 and a positive first
// nonzero entry in row-major order.
struct Homography {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Homography Identity();
  static Homography Translation(double tx, double ty);
  static Homography Scale(double sx, double sy);
};

struct Correspondence {
  Point2 src;
  Point2 dst;
};

// Per-corner pixel displacements in TL, TR, BR, BL order.
struct QuadOffsets {
  std::array<Point2, 4> d{};
};

struct EllipseParams {
  Point2 center;
  double a = 1.0;    // semi-major, pixels
  double b = 1.0;    // semi-minor, pixels, 0 < b <= a
  double phi = 0.0;  // major-axis rotation, radians
};

// Vertices in TL, TR, BR, BL order.
struct Quad {
  std::array<Point2, 4> v{};
};

Homography Canonical(const Homography& h);
Homography Inverse(const Homography& h);
Homography Compose(const Homography& a, const Homography& b);  // a after b
double MaxAbsDifference(const Homography& a, const Homography& b);

Point2 Project(const Homography& h, const Point2& p);

// Exact four-point homography fit with Hartley-style isotropic normalization.
Homography SolveDlt(const std::array<Correspondence, 4>& corrs);

// Endpoints of the major and minor axes mapped onto the circumcircle of
// radius a: the major endpoints stay fixed, the minor endpoints move from
// radius b to radius a along the minor-axis direction.
std::array<Correspondence, 4> EllipseAlignmentPairs(const EllipseParams& e);

// Quad vertices mapped to the corners of an out_w x out_h image frame.
std::array<Correspondence, 4> QuadAlignmentPairs(const Quad& q, int out_w,
                                                 int out_h);

std::array<Point2, 4> FrameCorners(int frame_w, int frame_h);

// Homography fitted through {corner_i -> corner_i + d_i} over the image
// frame; zero offsets yield the identity.
Homography OffsetsToHomography(int frame_w, int frame_h, const QuadOffsets& d);

}  // namespace meterkit

#endif  // METERKIT_GEOMETRY_HPP_
