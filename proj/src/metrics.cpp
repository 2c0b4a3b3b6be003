#include "meterkit/metrics.hpp"

#include <cmath>

namespace meterkit {

double AvgRelativeError(const std::vector<EvalRecord>& records) {
  if (records.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no records");
  }
  double sum = 0.0;
  for (const auto& r : records) {
    if (r.ground_truth == 0.0) {
      throw Error(ErrorKind::kInvalidArgument, "zero ground truth");
    }
    sum += std::abs(r.predicted - r.ground_truth) / r.ground_truth;
  }
  return sum / records.size() * 100.0;
}

double AvgReferenceError(const std::vector<EvalRecord>& records) {
  if (records.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no records");
  }
  double sum = 0.0;
  for (const auto& r : records) {
    if (!(r.range > 0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "nonpositive range");
    }
    sum += std::abs(r.predicted - r.ground_truth) / r.range;
  }
  return sum / records.size() * 100.0;
}

double MaskIou(const BinaryMask& a, const BinaryMask& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kDimensionMismatch, "mask shape mismatch");
  }
  std::size_t inter = 0, uni = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const bool va = a.at(x, y);
      const bool vb = b.at(x, y);
      inter += va && vb;
      uni += va || vb;
    }
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / uni;
}

}  // namespace meterkit
