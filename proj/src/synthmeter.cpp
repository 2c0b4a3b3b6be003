#include "meterkit/synthmeter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "meterkit/ctc.hpp"
#include "meterkit/warp.hpp"

namespace meterkit {
namespace {

constexpr double kDeg2Rad = std::numbers::pi / 180.0;

struct Rgb {
  float r, g, b;
};

// 5x7 bitmap glyphs, one 5-bit row per byte, top row first.
const std::uint8_t* GlyphRows(char c) {
  static const std::uint8_t font[11][7] = {
      {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E},  // 0
      {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E},  // 1
      {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F},  // 2
      {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E},  // 3
      {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02},  // 4
      {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E},  // 5
      {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E},  // 6
      {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
      {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E},  // 8
      {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C},  // 9
      {0x00, 0x00, 0x00, 0x00, 0x00, 0x06, 0x06},  // .
  };
  if (c >= '0' && c <= '9') return font[c - '0'];
  if (c == '.') return font[10];
  return nullptr;
}

void BlendPixel(ImageBuffer& img, int x, int y, const Rgb& c, double alpha) {
  if (x < 0 || y < 0 || x >= img.width() || y >= img.height() || alpha <= 0.0) {
    return;
  }
  const float a = static_cast<float>(std::min(alpha, 1.0));
  img.set(x, y, 0, img.at(x, y, 0) * (1 - a) + c.r * a);
  img.set(x, y, 1, img.at(x, y, 1) * (1 - a) + c.g * a);
  img.set(x, y, 2, img.at(x, y, 2) * (1 - a) + c.b * a);
}

double SegmentDistance(double px, double py, const Point2& a, const Point2& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((px - a.x) * vx + (py - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (a.x + t * vx), py - (a.y + t * vy));
}

void DrawDiskAA(ImageBuffer& img, const Point2& c, double r, const Rgb& color) {
  const int x0 = std::max(0, static_cast<int>(std::floor(c.x - r - 1)));
  const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(c.x + r + 1)));
  const int y0 = std::max(0, static_cast<int>(std::floor(c.y - r - 1)));
  const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(c.y + r + 1)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double d = std::hypot(x - c.x, y - c.y);
      BlendPixel(img, x, y, color, 0.5 + (r - d));
    }
  }
}

void DrawCapsuleAA(ImageBuffer& img, const Point2& a, const Point2& b, double r,
                   const Rgb& color) {
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - r - 1)));
  const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + r + 1)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - r - 1)));
  const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + r + 1)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double d = SegmentDistance(x, y, a, b);
      BlendPixel(img, x, y, color, 0.5 + (r - d));
    }
  }
}

void FillDiskBinary(ScoreMap& map, const Point2& c, double r) {
  const int x0 = std::max(0, static_cast<int>(std::floor(c.x - r)));
  const int x1 = std::min(map.width() - 1, static_cast<int>(std::ceil(c.x + r)));
  const int y0 = std::max(0, static_cast<int>(std::floor(c.y - r)));
  const int y1 = std::min(map.height() - 1, static_cast<int>(std::ceil(c.y + r)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (std::hypot(x - c.x, y - c.y) <= r) map.set(x, y, 1.0f);
    }
  }
}

void FillCapsuleBinary(ScoreMap& map, const Point2& a, const Point2& b,
                       double r) {
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - r)));
  const int x1 = std::min(map.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + r)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - r)));
  const int y1 = std::min(map.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + r)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (SegmentDistance(x, y, a, b) <= r) map.set(x, y, 1.0f);
    }
  }
}

void DrawText(ImageBuffer& img, const std::string& text, const Point2& center,
              int scale, const Rgb& color) {
  const int glyph_w = 6 * scale;  // 5 columns + 1 spacing
  const int total_w = static_cast<int>(text.size()) * glyph_w - scale;
  int pen_x = static_cast<int>(std::lround(center.x - total_w / 2.0));
  const int pen_y = static_cast<int>(std::lround(center.y - 3.5 * scale));
  for (char c : text) {
    const std::uint8_t* rows = GlyphRows(c);
    if (rows) {
      for (int ry = 0; ry < 7; ++ry) {
        for (int rx = 0; rx < 5; ++rx) {
          if (!(rows[ry] & (1 << (4 - rx)))) continue;
          for (int sy = 0; sy < scale; ++sy) {
            for (int sx = 0; sx < scale; ++sx) {
              BlendPixel(img, pen_x + rx * scale + sx, pen_y + ry * scale + sy,
                         color, 1.0);
            }
          }
        }
      }
    }
    pen_x += glyph_w;
  }
}

double UniformDouble(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

SynthScene Render(const MeterSpec& spec) {
  const int size = spec.image_size;
  if (size < 32 || !(spec.dial_radius > 4.0) ||
      !(spec.dial_radius < size / 2.0) || !(spec.span_angle > 0.0) ||
      !(spec.span_angle < 360.0) || spec.pointer_fraction < 0.0 ||
      spec.pointer_fraction > 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "invalid meter spec");
  }

  const Point2 center{(size - 1) / 2.0, (size - 1) / 2.0};
  const double radius = spec.dial_radius;
  auto on_dial = [&](double angle_deg, double r) {
    return Point2{center.x + r * std::cos(angle_deg * kDeg2Rad),
                  center.y + r * std::sin(angle_deg * kDeg2Rad)};
  };

  const double pointer_angle =
      spec.zero_angle + spec.pointer_fraction * spec.span_angle;
  const double key_angle = spec.zero_angle + spec.span_angle;
  const Point2 zero_pt = on_dial(spec.zero_angle, 0.9 * radius);
  const Point2 key_pt = on_dial(key_angle, 0.9 * radius);

  // Display image: textured background, dial face, ticks, pointer, scales,
  // and the key number.
  ImageBuffer image(size, size, 3);
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const float n = static_cast<float>(UniformDouble(rng, -0.03, 0.03));
      const float v = std::clamp(0.80f + n, 0.0f, 1.0f);
      for (int c = 0; c < 3; ++c) image.set(x, y, c, v);
    }
  }
  DrawDiskAA(image, center, radius + 2.0, {0.15f, 0.15f, 0.18f});  // rim
  DrawDiskAA(image, center, radius - 1.0, {0.95f, 0.95f, 0.93f});  // face
  const int ticks = 10;
  for (int i = 0; i <= ticks; ++i) {
    const double a = spec.zero_angle + spec.span_angle * i / ticks;
    DrawCapsuleAA(image, on_dial(a, 0.86 * radius), on_dial(a, 0.97 * radius),
                  i % 5 == 0 ? 1.2 : 0.7, {0.2f, 0.2f, 0.2f});
  }
  DrawDiskAA(image, zero_pt, 2.5, {0.10f, 0.10f, 0.55f});
  DrawDiskAA(image, key_pt, 2.5, {0.10f, 0.10f, 0.55f});
  DrawCapsuleAA(image, center, on_dial(pointer_angle, 0.8 * radius), 1.5,
                {0.75f, 0.08f, 0.08f});
  DrawDiskAA(image, center, 3.0, {0.2f, 0.2f, 0.2f});
  DrawText(image, spec.key_number, on_dial(key_angle, 0.6 * radius), 2,
           {0.1f, 0.1f, 0.1f});

  // Hard-edged ground-truth maps: they must binarize exactly.
  ScoreMap pointer_map(size, size);
  FillCapsuleBinary(pointer_map, center, on_dial(pointer_angle, 0.8 * radius),
                    1.5);
  ScoreMap key_scale_map(size, size);
  FillDiskBinary(key_scale_map, zero_pt, 2.5);
  FillDiskBinary(key_scale_map, key_pt, 2.5);

  MeterAnnotation ann;
  ann.dial_center = center;
  ann.zero_scale = zero_pt;
  ann.key_scale = key_pt;
  ann.pointer_angle = pointer_angle;
  ann.key_number = spec.key_number;
  ann.true_reading = spec.pointer_fraction * ParseNumeric(spec.key_number);
  ann.h_gt = spec.distortion ? Canonical(*spec.distortion)
                             : Homography::Identity();
  const auto corners = FrameCorners(size, size);
  for (int i = 0; i < 4; ++i) {
    const Point2 moved = Project(ann.h_gt, corners[i]);
    ann.offsets.d[i] = {moved.x - corners[i].x, moved.y - corners[i].y};
    ann.correspondences[i] = {corners[i], moved};
  }

  if (spec.distortion) {
    image = WarpImage(image, ann.h_gt, size, size);
    pointer_map = WarpScoreMap(pointer_map, ann.h_gt, size, size);
    key_scale_map = WarpScoreMap(key_scale_map, ann.h_gt, size, size);
  }

  return SynthScene{std::move(image), std::move(pointer_map),
                    std::move(key_scale_map), std::move(ann)};
}

MeterSpec RandomSpec(std::uint64_t seed, const SpecConstraints& c) {
  if (c.image_size_min > c.image_size_max || c.key_numbers.empty() ||
      c.radius_frac_min > c.radius_frac_max || c.span_min > c.span_max ||
      c.fraction_min > c.fraction_max || c.jitter_frac < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "empty constraint range");
  }
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 0x1234567ULL);

  MeterSpec spec;
  spec.seed = seed;
  spec.image_size = c.image_size_min +
                    static_cast<int>(UniformDouble(
                        rng, 0.0, c.image_size_max - c.image_size_min + 1.0));
  spec.image_size = std::min(spec.image_size, c.image_size_max);
  spec.dial_radius =
      UniformDouble(rng, c.radius_frac_min, c.radius_frac_max) *
      spec.image_size;
  spec.zero_angle = UniformDouble(rng, c.zero_angle_min, c.zero_angle_max);
  spec.span_angle = UniformDouble(rng, c.span_min, c.span_max);
  spec.pointer_fraction = UniformDouble(rng, c.fraction_min, c.fraction_max);
  spec.key_number = c.key_numbers[static_cast<std::size_t>(
      UniformDouble(rng, 0.0, static_cast<double>(c.key_numbers.size()) -
                                  1e-9))];
  if (c.distort) {
    QuadOffsets jitter;
    const double bound = c.jitter_frac * spec.image_size;
    for (auto& d : jitter.d) {
      d.x = UniformDouble(rng, -bound, bound);
      d.y = UniformDouble(rng, -bound, bound);
    }
    spec.distortion =
        OffsetsToHomography(spec.image_size, spec.image_size, jitter);
  }
  return spec;
}

}  // namespace meterkit
