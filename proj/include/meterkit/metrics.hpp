#ifndef METERKIT_METRICS_HPP_
#define METERKIT_METRICS_HPP_

#include <vector>

#include "meterkit/core.hpp"

namespace meterkit {

struct EvalRecord {
  double predicted = 0.0;
  double ground_truth = 0.0;
  double range = 1.0;
};

// mean(|p - g| / g) * 100.
double AvgRelativeError(const std::vector<EvalRecord>& records);

// mean(|p - g| / R) * 100, with a per-record range.
double AvgReferenceError(const std::vector<EvalRecord>& records);

// |a n b| / |a u b|; 1 when both masks are empty.
double MaskIou(const BinaryMask& a, const BinaryMask& b);

}  // namespace meterkit

#endif  // METERKIT_METRICS_HPP_
