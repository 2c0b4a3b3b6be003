#ifndef METERKIT_POSTPROC_HPP_
#define METERKIT_POSTPROC_HPP_

#include <vector>

#include "meterkit/core.hpp"

namespace meterkit {

// Line {(x, y) : x cos(theta) + y sin(theta) = rho}, theta in [0, pi).
struct HoughLine {
  double rho = 0.0;
  double theta = 0.0;
};

struct Blob {
  Point2 centroid;
  std::size_t area = 0;
};

// Bit set iff value >= tau.
BinaryMask Binarize(const ScoreMap& m, double tau = 0.5);

// Guo-Hall two-subiteration thinning. The result is a subset of the input,
// idempotent, and preserves 8-connectivity of each component.
BinaryMask Thin(const BinaryMask& m);

// Peak accumulator cell; ties broken by smaller theta, then smaller rho.
HoughLine HoughLineDetect(const BinaryMask& m, int theta_bins = 180,
                          double rho_resolution = 1.0);

// 8-connected components, sorted by descending area, ties by first pixel in
// raster order.
std::vector<Blob> ConnectedBlobs(const BinaryMask& m);

}  // namespace meterkit

#endif  // METERKIT_POSTPROC_HPP_
