#include "meterkit/warp.hpp"

#include <cmath>

namespace meterkit {

float BilinearSample(const ImageBuffer& img, double x, double y, int ch) {
  if (ch < 0 || ch >= img.channels()) {
    throw Error(ErrorKind::kInvalidArgument, "channel out of range");
  }
  const int w = img.width();
  const int h = img.height();
  if (x < -1.0 || y < -1.0 || x > w || y > h) return 0.0f;

  const double xf = std::floor(x);
  const double yf = std::floor(y);
  const int x0 = static_cast<int>(xf);
  const int y0 = static_cast<int>(yf);
  const double fx = x - xf;
  const double fy = y - yf;

  auto tap = [&](int px, int py) -> double {
    if (px < 0 || py < 0 || px >= w || py >= h) return 0.0;
    return img.at(px, py, ch);
  };

  const double top = (1.0 - fx) * tap(x0, y0) + fx * tap(x0 + 1, y0);
  const double bot = (1.0 - fx) * tap(x0, y0 + 1) + fx * tap(x0 + 1, y0 + 1);
  return static_cast<float>((1.0 - fy) * top + fy * bot);
}

ImageBuffer WarpImage(const ImageBuffer& img, const Homography& h, int out_w,
                      int out_h) {
  const Homography hc = Canonical(h);
  if (MaxAbsDifference(hc, Homography::Identity()) == 0.0 &&
      out_w == img.width() && out_h == img.height()) {
    return img;
  }
  const Homography hinv = Inverse(hc);

  ImageBuffer out(out_w, out_h, img.channels());
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      Point2 p;
      try {
        p = Project(hinv, {static_cast<double>(x), static_cast<double>(y)});
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kPointAtInfinity) continue;  // stays 0
        throw;
      }
      for (int c = 0; c < img.channels(); ++c) {
        out.set(x, y, c, BilinearSample(img, p.x, p.y, c));
      }
    }
  }
  return out;
}

ScoreMap WarpScoreMap(const ScoreMap& m, const Homography& h, int out_w,
                      int out_h) {
  return ScoreMap(WarpImage(m.image(), h, out_w, out_h));
}

}  // namespace meterkit
