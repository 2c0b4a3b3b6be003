#ifndef METERKIT_WARP_HPP_
#define METERKIT_WARP_HPP_

#include "meterkit/core.hpp"
#include "meterkit/geometry.hpp"

namespace meterkit {

// Bilinear blend of the four surrounding pixel centers; coordinates outside
// [0, w-1] x [0, h-1] read as zero padding.
float BilinearSample(const ImageBuffer& img, double x, double y, int ch);

// Inverse-mapped resampling: output pixel (x, y) samples the source at
// h^-1 (x, y). Pixels whose preimage lies on the horizon are set to 0.
ImageBuffer WarpImage(const ImageBuffer& img, const Homography& h, int out_w,
                      int out_h);

ScoreMap WarpScoreMap(const ScoreMap& m, const Homography& h, int out_w,
                      int out_h);

}  // namespace meterkit

#endif  // METERKIT_WARP_HPP_
