#include "meterkit/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace meterkit {

BinaryMask Binarize(const ScoreMap& m, double tau) {
  BinaryMask out(m.width(), m.height());
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      out.set(x, y, m.at(x, y) >= tau);
    }
  }
  return out;
}

namespace {

// Neighbours P2..P9 clockwise from north, as in the Zhang-Suen paper.
constexpr int kNbrDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kNbrDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

// Guo-Hall deletion test. The Zhang-Suen conditions annihilate 2x2 blocks
// and 2-px-wide diagonal strokes outright; the Guo-Hall pair is the standard
// two-subiteration scheme that provably keeps each component connected.
bool Deletable(const BinaryMask& m, int x, int y, int subiter) {
  const int w = m.width();
  const int h = m.height();
  auto get = [&](int px, int py) -> int {
    if (px < 0 || py < 0 || px >= w || py >= h) return 0;
    return m.at(px, py) ? 1 : 0;
  };
  int p[8];  // P2..P9 clockwise from north
  for (int i = 0; i < 8; ++i) p[i] = get(x + kNbrDx[i], y + kNbrDy[i]);
  const int p2 = p[0], p3 = p[1], p4 = p[2], p5 = p[3];
  const int p6 = p[4], p7 = p[5], p8 = p[6], p9 = p[7];

  const int c = ((!p2 && (p3 || p4)) ? 1 : 0) + ((!p4 && (p5 || p6)) ? 1 : 0) +
                ((!p6 && (p7 || p8)) ? 1 : 0) + ((!p8 && (p9 || p2)) ? 1 : 0);
  const int n1 = (p9 || p2) + (p3 || p4) + (p5 || p6) + (p7 || p8);
  const int n2 = (p2 || p3) + (p4 || p5) + (p6 || p7) + (p8 || p9);
  const int n = std::min(n1, n2);
  const int e = subiter == 0 ? ((p6 || p7 || !p9) && p8)
                             : ((p2 || p3 || !p5) && p4);
  return c == 1 && n >= 2 && n <= 3 && e == 0;
}

bool ThinPass(const BinaryMask& in, BinaryMask& out, int subiter) {
  bool changed = false;
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      const bool keep = in.at(x, y) && !Deletable(in, x, y, subiter);
      out.set(x, y, keep);
      changed = changed || (in.at(x, y) && !keep);
    }
  }
  return changed;
}

}  // namespace

BinaryMask Thin(const BinaryMask& m) {
  BinaryMask cur = m;
  BinaryMask next(m.width(), m.height());
  while (true) {
    const bool c0 = ThinPass(cur, next, 0);
    std::swap(cur, next);
    const bool c1 = ThinPass(cur, next, 1);
    std::swap(cur, next);
    if (!c0 && !c1) break;
  }
  return cur;
}

HoughLine HoughLineDetect(const BinaryMask& m, int theta_bins,
                          double rho_resolution) {
  if (theta_bins < 1 || rho_resolution <= 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "bad accumulator parameters");
  }
  if (m.count() < 2) {
    throw Error(ErrorKind::kInsufficientPixels,
                "Hough transform needs at least 2 set pixels");
  }
  const double diag = std::hypot(m.width() - 1.0, m.height() - 1.0);
  const int rho_bins = 2 * static_cast<int>(std::ceil(diag / rho_resolution)) + 1;
  const int rho_center = rho_bins / 2;

  std::vector<double> cos_t(theta_bins), sin_t(theta_bins);
  for (int t = 0; t < theta_bins; ++t) {
    const double theta = std::numbers::pi * t / theta_bins;
    cos_t[t] = std::cos(theta);
    sin_t[t] = std::sin(theta);
  }

  std::vector<int> acc(static_cast<std::size_t>(theta_bins) * rho_bins, 0);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      for (int t = 0; t < theta_bins; ++t) {
        const double rho = x * cos_t[t] + y * sin_t[t];
        const int r = rho_center +
                      static_cast<int>(std::lround(rho / rho_resolution));
        if (r >= 0 && r < rho_bins) {
          ++acc[static_cast<std::size_t>(t) * rho_bins + r];
        }
      }
    }
  }

  int best_t = 0, best_r = 0, best_votes = -1;
  for (int t = 0; t < theta_bins; ++t) {
    for (int r = 0; r < rho_bins; ++r) {
      const int votes = acc[static_cast<std::size_t>(t) * rho_bins + r];
      if (votes > best_votes) {
        best_votes = votes;
        best_t = t;
        best_r = r;
      }
    }
  }
  return {(best_r - rho_center) * rho_resolution,
          std::numbers::pi * best_t / theta_bins};
}

std::vector<Blob> ConnectedBlobs(const BinaryMask& m) {
  const int w = m.width();
  const int h = m.height();
  std::vector<bool> seen(static_cast<std::size_t>(w) * h, false);

  struct Component {
    double sx = 0.0, sy = 0.0;
    std::size_t area = 0;
    std::size_t first_index = 0;  // raster index of the discovery pixel
  };
  std::vector<Component> comps;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (!m.at(x, y) || seen[idx]) continue;
      Component comp;
      comp.first_index = idx;
      std::queue<std::pair<int, int>> frontier;
      frontier.push({x, y});
      seen[idx] = true;
      while (!frontier.empty()) {
        auto [cx, cy] = frontier.front();
        frontier.pop();
        comp.sx += cx;
        comp.sy += cy;
        ++comp.area;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
            if (m.at(nx, ny) && !seen[nidx]) {
              seen[nidx] = true;
              frontier.push({nx, ny});
            }
          }
        }
      }
      comps.push_back(comp);
    }
  }

  std::stable_sort(comps.begin(), comps.end(),
                   [](const Component& a, const Component& b) {
                     if (a.area != b.area) return a.area > b.area;
                     return a.first_index < b.first_index;
                   });
  std::vector<Blob> blobs;
  blobs.reserve(comps.size());
  for (const auto& c : comps) {
    blobs.push_back({{c.sx / c.area, c.sy / c.area}, c.area});
  }
  return blobs;
}

}  // namespace meterkit
