#include "meterkit/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace meterkit {
namespace {

constexpr double kHorizonEps = 1e-12;

Eigen::Matrix3d ToEigen(const Homography& h) {
  Eigen::Matrix3d m;
  m << h.m[0], h.m[1], h.m[2], h.m[3], h.m[4], h.m[5], h.m[6], h.m[7], h.m[8];
  return m;
}

Homography FromEigen(const Eigen::Matrix3d& m) {
  Homography h;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) h.m[r * 3 + c] = m(r, c);
  }
  return h;
}

bool ThreeCollinear(const Point2& a, const Point2& b, const Point2& c,
                    double scale) {
  const double area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return std::abs(area2) <= 1e-9 * std::max(1.0, scale * scale);
}

void CheckNonDegenerate(const std::array<Point2, 4>& pts, const char* side) {
  double scale = 0.0;
  for (const auto& p : pts) {
    scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (ThreeCollinear(pts[i], pts[j], pts[k], scale)) {
          throw Error(ErrorKind::kDegenerateConfiguration,
                      std::string("three collinear ") + side + " points");
        }
      }
    }
  }
}

// Translate to the centroid and scale so the mean distance is sqrt(2).
Eigen::Matrix3d HartleyNormalization(const std::array<Point2, 4>& pts) {
  double cx = 0.0, cy = 0.0;
  for (const auto& p : pts) {
    cx += p.x;
    cy += p.y;
  }
  cx /= 4.0;
  cy /= 4.0;
  double mean_dist = 0.0;
  for (const auto& p : pts) {
    mean_dist += std::hypot(p.x - cx, p.y - cy);
  }
  mean_dist /= 4.0;
  const double s = mean_dist > 0.0 ? std::sqrt(2.0) / mean_dist : 1.0;
  Eigen::Matrix3d t;
  t << s, 0, -s * cx, 0, s, -s * cy, 0, 0, 1;
  return t;
}

}  // namespace

Homography Homography::Identity() { return Canonical(Homography{}); }

Homography Homography::Translation(double tx, double ty) {
  Homography h;
  h.m = {1, 0, tx, 0, 1, ty, 0, 0, 1};
  return Canonical(h);
}

Homography Homography::Scale(double sx, double sy) {
  Homography h;
  h.m = {sx, 0, 0, 0, sy, 0, 0, 0, 1};
  return Canonical(h);
}

Homography Canonical(const Homography& h) {
  double norm = 0.0;
  for (double v : h.m) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::kSingularSystem, "zero or non-finite homography");
  }
  double sign = 1.0;
  for (double v : h.m) {
    if (v != 0.0) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  Homography out;
  for (int i = 0; i < 9; ++i) out.m[i] = h.m[i] * sign / norm;
  const double det = ToEigen(out).determinant();
  if (std::abs(det) <= 1e-12) {
    throw Error(ErrorKind::kSingularSystem, "homography is not invertible");
  }
  return out;
}

Homography Inverse(const Homography& h) {
  const Eigen::Matrix3d m = ToEigen(h);
  if (std::abs(m.determinant()) <= 1e-12) {
    throw Error(ErrorKind::kSingularSystem, "homography is not invertible");
  }
  return Canonical(FromEigen(m.inverse()));
}

Homography Compose(const Homography& a, const Homography& b) {
  return Canonical(FromEigen(ToEigen(a) * ToEigen(b)));
}

double MaxAbsDifference(const Homography& a, const Homography& b) {
  double d = 0.0;
  for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

Point2 Project(const Homography& h, const Point2& p) {
  const double x = h.m[0] * p.x + h.m[1] * p.y + h.m[2];
  const double y = h.m[3] * p.x + h.m[4] * p.y + h.m[5];
  const double w = h.m[6] * p.x + h.m[7] * p.y + h.m[8];
  if (std::abs(w) <= kHorizonEps) {
    throw Error(ErrorKind::kPointAtInfinity, "point maps to infinity");
  }
  return {x / w, y / w};
}

Homography SolveDlt(const std::array<Correspondence, 4>& corrs) {
  std::array<Point2, 4> src, dst;
  for (int i = 0; i < 4; ++i) {
    src[i] = corrs[i].src;
    dst[i] = corrs[i].dst;
  }
  CheckNonDegenerate(src, "source");
  CheckNonDegenerate(dst, "destination");

  const Eigen::Matrix3d t_src = HartleyNormalization(src);
  const Eigen::Matrix3d t_dst = HartleyNormalization(dst);

  Eigen::Matrix<double, 8, 9> a = Eigen::Matrix<double, 8, 9>::Zero();
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector3d s = t_src * Eigen::Vector3d(src[i].x, src[i].y, 1.0);
    const Eigen::Vector3d d = t_dst * Eigen::Vector3d(dst[i].x, dst[i].y, 1.0);
    a.row(2 * i) << s(0), s(1), s(2), 0, 0, 0, -d(0) * s(0), -d(0) * s(1),
        -d(0) * s(2);
    a.row(2 * i + 1) << 0, 0, 0, s(0), s(1), s(2), -d(1) * s(0), -d(1) * s(1),
        -d(1) * s(2);
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 9>> svd(
      a, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 9, 1> hvec = svd.matrixV().col(8);
  Eigen::Matrix3d hn;
  hn << hvec(0), hvec(1), hvec(2), hvec(3), hvec(4), hvec(5), hvec(6), hvec(7),
      hvec(8);
  if (std::abs(hn.determinant()) <= 1e-15) {
    throw Error(ErrorKind::kSingularSystem, "DLT system is singular");
  }
  return Canonical(FromEigen(t_dst.inverse() * hn * t_src));
}

std::array<Correspondence, 4> EllipseAlignmentPairs(const EllipseParams& e) {
  if (!(e.a >= e.b) || !(e.b > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "require a >= b > 0");
  }
  const Point2 major_dir{std::cos(e.phi), std::sin(e.phi)};
  const Point2 minor_dir{-std::sin(e.phi), std::cos(e.phi)};
  auto along = [&](const Point2& dir, double r) {
    return Point2{e.center.x + r * dir.x, e.center.y + r * dir.y};
  };
  return {{
      {along(major_dir, e.a), along(major_dir, e.a)},
      {along(major_dir, -e.a), along(major_dir, -e.a)},
      {along(minor_dir, e.b), along(minor_dir, e.a)},
      {along(minor_dir, -e.b), along(minor_dir, -e.a)},
  }};
}

std::array<Correspondence, 4> QuadAlignmentPairs(const Quad& q, int out_w,
                                                 int out_h) {
  if (out_w < 2 || out_h < 2) {
    throw Error(ErrorKind::kInvalidArgument, "output size must be >= 2");
  }
  const auto corners = FrameCorners(out_w, out_h);
  std::array<Correspondence, 4> pairs;
  for (int i = 0; i < 4; ++i) pairs[i] = {q.v[i], corners[i]};
  return pairs;
}

std::array<Point2, 4> FrameCorners(int frame_w, int frame_h) {
  const double w = frame_w - 1.0;
  const double h = frame_h - 1.0;
  return {{{0, 0}, {w, 0}, {w, h}, {0, h}}};
}

Homography OffsetsToHomography(int frame_w, int frame_h, const QuadOffsets& d) {
  const auto corners = FrameCorners(frame_w, frame_h);
  std::array<Correspondence, 4> pairs;
  for (int i = 0; i < 4; ++i) {
    pairs[i] = {corners[i],
                {corners[i].x + d.d[i].x, corners[i].y + d.d[i].y}};
  }
  return SolveDlt(pairs);
}

}  // namespace meterkit
