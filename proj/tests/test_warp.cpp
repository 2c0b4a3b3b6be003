#include <cmath>
#include <random>

#include "doctest.h"
#include "meterkit/warp.hpp"

using namespace meterkit;

namespace {

ImageBuffer GradientImage(int w, int h) {
  ImageBuffer img(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.set(x, y, 0, static_cast<float>((x + y) / double(w + h - 2)));
    }
  }
  return img;
}

ImageBuffer RandomImage(std::mt19937& rng, int w, int h, int ch) {
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  ImageBuffer img(w, h, ch);
  for (auto& v : img.data()) v = dist(rng);
  return img;
}

}  // namespace

TEST_CASE("bilinear sample at integer coordinates returns the pixel") {
  std::mt19937 rng(7);
  const auto img = RandomImage(rng, 5, 4, 1);
  CHECK(BilinearSample(img, 2.0, 3.0, 0) == img.at(2, 3, 0));
}

TEST_CASE("bilinear sample midpoint averages") {
  ImageBuffer img(2, 1, 1, {0.0f, 1.0f});
  CHECK(BilinearSample(img, 0.5, 0.0, 0) == doctest::Approx(0.5));
}

TEST_CASE("bilinear sample hand-evaluated 2x2 case") {
  ImageBuffer img(2, 2, 1, {0.0f, 1.0f, 0.0f, 1.0f});
  // (1-fy)((1-fx)*0 + fx*1) + fy((1-fx)*0 + fx*1) = fx = 0.25.
  CHECK(BilinearSample(img, 0.25, 0.75, 0) == doctest::Approx(0.25));
}

TEST_CASE("bilinear sample outside the frame reads zero") {
  ImageBuffer img(2, 2, 1, {1.0f, 1.0f, 1.0f, 1.0f});
  CHECK(BilinearSample(img, -2.0, 0.0, 0) == 0.0f);
  CHECK(BilinearSample(img, 0.0, 5.0, 0) == 0.0f);
  // Half a pixel outside blends toward the zero padding.
  CHECK(BilinearSample(img, -0.5, 0.0, 0) == doctest::Approx(0.5));
}

TEST_CASE("identity warp is bit-exact") {
  std::mt19937 rng(8);
  const auto img = RandomImage(rng, 17, 13, 3);
  const auto warped = WarpImage(img, Homography::Identity(), 17, 13);
  CHECK(warped.data() == img.data());
}

TEST_CASE("integer translation shifts with a zero band") {
  const auto img = GradientImage(10, 8);
  const auto warped = WarpImage(img, Homography::Translation(2, 0), 10, 8);
  for (int y = 0; y < 8; ++y) {
    CHECK(warped.at(0, y, 0) == 0.0f);
    CHECK(warped.at(1, y, 0) == 0.0f);
    for (int x = 2; x < 10; ++x) {
      CHECK(warped.at(x, y, 0) == doctest::Approx(img.at(x - 2, y, 0)));
    }
  }
}

TEST_CASE("warp round trip on a smooth gradient") {
  Homography h0;
  h0.m = {1.05, 0.08, 3.0, -0.04, 0.97, -2.0, 2e-4, -1e-4, 1.0};
  h0 = Canonical(h0);
  const auto img = GradientImage(64, 64);
  const auto once = WarpImage(img, h0, 64, 64);
  const auto back = WarpImage(once, Canonical(Inverse(h0)), 64, 64);
  int checked = 0;
  for (int y = 2; y < 62; ++y) {
    for (int x = 2; x < 62; ++x) {
      // Only pixels whose image stayed inside the intermediate frame can
      // survive the round trip; the rest fall into the zero padding.
      const Point2 mid = Project(h0, {double(x), double(y)});
      if (mid.x < 2 || mid.y < 2 || mid.x > 61 || mid.y > 61) continue;
      CHECK(std::abs(back.at(x, y, 0) - img.at(x, y, 0)) < 0.02);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("warp is linear in the image") {
  std::mt19937 rng(9);
  const auto a = RandomImage(rng, 12, 12, 1);
  const auto b = RandomImage(rng, 12, 12, 1);
  Homography h;
  h.m = {0.9, 0.1, 1.0, -0.05, 1.1, 0.5, 1e-4, 0, 1};
  h = Canonical(h);

  const double wa = 0.3, wb = 0.7;
  ImageBuffer mix(12, 12, 1);
  for (std::size_t i = 0; i < mix.data().size(); ++i) {
    mix.data()[i] = static_cast<float>(wa * a.data()[i] + wb * b.data()[i]);
  }
  const auto warped_mix = WarpImage(mix, h, 12, 12);
  const auto warped_a = WarpImage(a, h, 12, 12);
  const auto warped_b = WarpImage(b, h, 12, 12);
  for (std::size_t i = 0; i < mix.data().size(); ++i) {
    const double expect = wa * warped_a.data()[i] + wb * warped_b.data()[i];
    CHECK(std::abs(warped_mix.data()[i] - expect) < 1e-6);
  }
}

TEST_CASE("warp output stays in [0,1]") {
  std::mt19937 rng(10);
  const auto img = RandomImage(rng, 20, 20, 1);
  Homography h;
  h.m = {1.2, -0.3, 4.0, 0.2, 0.8, -3.0, 1e-3, -5e-4, 1.0};
  const auto warped = WarpImage(img, Canonical(h), 25, 25);
  for (float v : warped.data()) {
    CHECK(v >= 0.0f);
    CHECK(v <= 1.0f);
  }
}
