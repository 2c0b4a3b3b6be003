#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "meterkit/postproc.hpp"

using namespace meterkit;

namespace {

BinaryMask RandomBlobMask(std::mt19937& rng, int size) {
  std::uniform_real_distribution<double> coord(4.0, size - 5.0);
  std::uniform_real_distribution<double> radius(1.5, 6.0);
  BinaryMask m(size, size);
  const int blobs = 1 + static_cast<int>(rng() % 4);
  for (int b = 0; b < blobs; ++b) {
    const double cx = coord(rng), cy = coord(rng), r = radius(rng);
    for (int y = 0; y < size; ++y) {
      for (int x = 0; x < size; ++x) {
        if (std::hypot(x - cx, y - cy) <= r) m.set(x, y, true);
      }
    }
  }
  return m;
}

std::size_t SubsetViolations(const BinaryMask& inner, const BinaryMask& outer) {
  std::size_t n = 0;
  for (int y = 0; y < inner.height(); ++y) {
    for (int x = 0; x < inner.width(); ++x) {
      if (inner.at(x, y) && !outer.at(x, y)) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("binarize: basic thresholding rules") {
  ScoreMap m(2, 2);
  m.set(0, 0, 0.2f);
  m.set(1, 0, 0.7f);
  m.set(0, 1, 0.5f);
  m.set(1, 1, 0.49f);
  const auto mask = Binarize(m, 0.5);
  CHECK_FALSE(mask.at(0, 0));
  CHECK(mask.at(1, 0));
  CHECK(mask.at(0, 1));  // >= convention at the boundary
  CHECK_FALSE(mask.at(1, 1));

  CHECK(Binarize(ScoreMap(4, 4), 0.5).count() == 0);
}

TEST_CASE("binarize is monotone in the threshold") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  ScoreMap m(8, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) m.set(x, y, dist(rng));
  const auto low = Binarize(m, 0.3);
  const auto high = Binarize(m, 0.6);
  CHECK(SubsetViolations(high, low) == 0);
}

TEST_CASE("thin: empty and already-thin inputs are unchanged") {
  BinaryMask empty(10, 10);
  CHECK(Thin(empty) == empty);

  BinaryMask line(20, 5);
  for (int x = 3; x < 17; ++x) line.set(x, 2, true);
  CHECK(Thin(line) == line);
}

TEST_CASE("thin: thick bar collapses to its centerline") {
  BinaryMask bar(26, 9);
  for (int y = 3; y <= 5; ++y)
    for (int x = 3; x < 23; ++x) bar.set(x, y, true);
  const auto skel = Thin(bar);
  CHECK(SubsetViolations(skel, bar) == 0);
  // Middle row survives away from the (possibly eroded) ends.
  for (int x = 5; x < 21; ++x) {
    CHECK(skel.at(x, 4));
    CHECK_FALSE(skel.at(x, 3));
    CHECK_FALSE(skel.at(x, 5));
  }
}

TEST_CASE("thin is idempotent and never creates pixels") {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 100; ++iter) {
    const auto mask = RandomBlobMask(rng, 40);
    const auto once = Thin(mask);
    CHECK(SubsetViolations(once, mask) == 0);
    CHECK(Thin(once) == once);
  }
}

TEST_CASE("hough: axis-aligned lines") {
  // Long enough that the one-degree neighbours spread over several rho
  // cells and the peak is unique.
  BinaryMask vertical(64, 64);
  for (int y = 1; y < 63; ++y) vertical.set(5, y, true);
  auto line = HoughLineDetect(vertical);
  CHECK(line.theta == doctest::Approx(0.0));
  CHECK(line.rho == doctest::Approx(5.0));

  BinaryMask horizontal(64, 64);
  for (int x = 1; x < 63; ++x) horizontal.set(x, 3, true);
  line = HoughLineDetect(horizontal);
  CHECK(line.theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(line.rho == doctest::Approx(3.0));
}

TEST_CASE("hough: y = x diagonal lands at theta 3pi/4, rho 0") {
  BinaryMask diag(24, 24);
  for (int i = 0; i < 24; ++i) diag.set(i, i, true);
  const auto line = HoughLineDetect(diag);
  CHECK(line.theta == doctest::Approx(3 * std::numbers::pi / 4));
  CHECK(line.rho == doctest::Approx(0.0));
}

TEST_CASE("hough: insufficient pixels raise an error") {
  BinaryMask one(8, 8);
  one.set(3, 3, true);
  try {
    HoughLineDetect(one);
    FAIL("expected insufficient-pixels");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientPixels);
  }
}

TEST_CASE("hough recovers rasterized line parameters") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int iter = 0; iter < 200 && checked < 100; ++iter) {
    const double theta = static_cast<double>(rng() % 180) * std::numbers::pi /
                         180.0;
    const double rho = 10.0 + static_cast<double>(rng() % 31);
    // Rasterize {x cos + y sin = rho}: pixel centers within half a pixel.
    BinaryMask m(96, 96);
    int set = 0;
    for (int y = 0; y < 96; ++y) {
      for (int x = 0; x < 96; ++x) {
        if (std::abs(x * std::cos(theta) + y * std::sin(theta) - rho) <= 0.5) {
          m.set(x, y, true);
          ++set;
        }
      }
    }
    if (set < 40) continue;
    ++checked;
    const auto line = HoughLineDetect(m);
    double dt = std::abs(line.theta - theta);
    double found_rho = line.rho;
    if (dt > std::numbers::pi / 2) {  // wrap: (theta+pi, -rho) ~ (theta, rho)
      dt = std::numbers::pi - dt;
      found_rho = -found_rho;
    }
    CHECK(dt <= std::numbers::pi / 180 + 1e-9);
    CHECK(std::abs(found_rho - rho) <= 1.5);
  }
}

TEST_CASE("blobs: single pixel and symmetric block") {
  BinaryMask m(10, 10);
  m.set(4, 7, true);
  auto blobs = ConnectedBlobs(m);
  REQUIRE(blobs.size() == 1);
  CHECK(blobs[0].centroid.x == doctest::Approx(4.0));
  CHECK(blobs[0].centroid.y == doctest::Approx(7.0));
  CHECK(blobs[0].area == 1);

  BinaryMask block(4, 4);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) block.set(x, y, true);
  blobs = ConnectedBlobs(block);
  REQUIRE(blobs.size() == 1);
  CHECK(blobs[0].centroid.x == doctest::Approx(0.5));
  CHECK(blobs[0].centroid.y == doctest::Approx(0.5));
  CHECK(blobs[0].area == 4);
}

TEST_CASE("blobs: two bars ordered by area then raster position") {
  BinaryMask m(16, 8);
  for (int x = 2; x < 5; ++x) m.set(x, 2, true);    // 3 px bar
  for (int x = 9; x < 13; ++x) m.set(x, 6, true);   // 4 px bar
  const auto blobs = ConnectedBlobs(m);
  REQUIRE(blobs.size() == 2);
  CHECK(blobs[0].area == 4);
  CHECK(blobs[0].centroid.x == doctest::Approx(10.5));
  CHECK(blobs[0].centroid.y == doctest::Approx(6.0));
  CHECK(blobs[1].area == 3);
  CHECK(blobs[1].centroid.x == doctest::Approx(3.0));

  CHECK(ConnectedBlobs(BinaryMask(4, 4)).empty());
}

TEST_CASE("blob areas sum to the set-pixel count") {
  std::mt19937 rng(14);
  for (int iter = 0; iter < 50; ++iter) {
    const auto m = RandomBlobMask(rng, 32);
    std::size_t total = 0;
    for (const auto& b : ConnectedBlobs(m)) total += b.area;
    CHECK(total == m.count());
  }
}
