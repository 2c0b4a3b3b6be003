#include <random>

#include "doctest.h"
#include "meterkit/metrics.hpp"

using namespace meterkit;

TEST_CASE("relative error: exact, single, and averaged cases") {
  CHECK(AvgRelativeError({{2.0, 2.0, 3.0}, {0.4, 0.4, 1.0}}) == 0.0);
  CHECK(AvgRelativeError({{1.1, 1.0, 2.0}}) == doctest::Approx(10.0));
  CHECK(AvgRelativeError({{1.1, 1.0, 2.0}, {3.0, 3.0, 4.0}}) ==
        doctest::Approx(5.0));
}

TEST_CASE("reference error uses the per-record range") {
  CHECK(AvgReferenceError({{1.1, 1.0, 2.0}}) == doctest::Approx(5.0));
  CHECK(AvgReferenceError({{1.2, 1.0, 2.0}}) == doctest::Approx(10.0));
  CHECK(AvgReferenceError({{1.1, 1.0, 2.0}, {1.1, 1.0, 4.0}}) ==
        doctest::Approx(3.75));
}

TEST_CASE("metric error paths") {
  CHECK_THROWS_AS(AvgRelativeError({}), Error);
  CHECK_THROWS_AS(AvgReferenceError({}), Error);
  CHECK_THROWS_AS(AvgRelativeError({{1.0, 0.0, 2.0}}), Error);
  CHECK_THROWS_AS(AvgReferenceError({{1.0, 1.0, 0.0}}), Error);
}

TEST_CASE("relative error is scale invariant, reference error is not") {
  std::mt19937 rng(40);
  std::uniform_real_distribution<double> v(0.5, 5.0);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<EvalRecord> recs, scaled, scaled_r;
    for (int i = 0; i < 5; ++i) {
      EvalRecord r{v(rng), v(rng), v(rng)};
      recs.push_back(r);
      scaled.push_back({r.predicted * 7, r.ground_truth * 7, r.range});
      scaled_r.push_back({r.predicted * 7, r.ground_truth * 7, r.range * 7});
    }
    CHECK(AvgRelativeError(scaled) ==
          doctest::Approx(AvgRelativeError(recs)).epsilon(1e-12));
    CHECK(AvgReferenceError(scaled_r) ==
          doctest::Approx(AvgReferenceError(recs)).epsilon(1e-12));
    CHECK(AvgReferenceError(scaled) ==
          doctest::Approx(7 * AvgReferenceError(recs)).epsilon(1e-12));
  }
}

TEST_CASE("mask iou counting") {
  BinaryMask a(4, 4), b(4, 4);
  CHECK(MaskIou(a, b) == 1.0);  // both empty

  a.set(0, 0, true);
  a.set(1, 0, true);
  CHECK(MaskIou(a, a) == 1.0);
  CHECK(MaskIou(a, b) == 0.0);

  b = a;
  b.set(2, 2, true);
  b.set(3, 3, true);
  CHECK(MaskIou(a, b) == doctest::Approx(0.5));
  CHECK(MaskIou(b, a) == doctest::Approx(0.5));

  CHECK_THROWS_AS(MaskIou(BinaryMask(2, 2), BinaryMask(3, 2)), Error);
}
