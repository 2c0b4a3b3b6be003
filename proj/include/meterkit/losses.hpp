#ifndef METERKIT_LOSSES_HPP_
#define METERKIT_LOSSES_HPP_

#include <vector>

#include "meterkit/core.hpp"
#include "meterkit/geometry.hpp"

namespace meterkit {

struct LossValue {
  double value = 0.0;
  std::vector<double> grad;  // d value / d prediction, prediction layout
};

// Sum of squared differences over all 8 offset components (no averaging).
LossValue MseOffsets(const QuadOffsets& pred, const QuadOffsets& gt);

// 1 - 2*sum(P*G) / (sum(P^2) + sum(G^2) + eps), eps = 1e-6.
LossValue DiceLoss(const ScoreMap& pred, const ScoreMap& gt);

// lambda * pointer-map loss + (1 - lambda) * key-scale-map loss; gradients
// are concatenated, pointer block first.
LossValue ComponentLoss(const LossValue& l_pm, const LossValue& l_ksm,
                        double lambda = 0.4);

// Binary cross-entropy over all positives plus the neg_ratio * #positives
// hardest negatives (highest predicted score). With no positives the
// selection falls back to the max(1, total/100) hardest negatives. The
// selection set is treated as constant for the gradient.
LossValue OhemBce(const ScoreMap& pred, const BinaryMask& gt,
                  int neg_ratio = 3);

// Exposed separately so callers can freeze the selection set while probing
// the loss (finite-difference checks use the subgradient convention).
std::vector<std::size_t> OhemSelect(const ScoreMap& pred, const BinaryMask& gt,
                                    int neg_ratio = 3);
LossValue BceOverSelection(const ScoreMap& pred, const BinaryMask& gt,
                           const std::vector<std::size_t>& selection);

// Unweighted sum; gradients concatenated per input block.
LossValue TotalLoss(const LossValue& l_com, const LossValue& l_num_det,
                    const LossValue& l_num_reco);

}  // namespace meterkit

#endif  // METERKIT_LOSSES_HPP_
