#include "meterkit/losses.hpp"

#include <algorithm>
#include <cmath>

namespace meterkit {
namespace {

constexpr double kDiceEps = 1e-6;
constexpr double kProbClamp = 1e-7;

void CheckSameShape(const ScoreMap& a, int w, int h) {
  if (a.width() != w || a.height() != h) {
    throw Error(ErrorKind::kDimensionMismatch, "score map shape mismatch");
  }
}

}  // namespace

LossValue MseOffsets(const QuadOffsets& pred, const QuadOffsets& gt) {
  LossValue out;
  out.grad.resize(8);
  for (int i = 0; i < 4; ++i) {
    const double dx = pred.d[i].x - gt.d[i].x;
    const double dy = pred.d[i].y - gt.d[i].y;
    out.value += dx * dx + dy * dy;
    out.grad[2 * i] = 2.0 * dx;
    out.grad[2 * i + 1] = 2.0 * dy;
  }
  return out;
}

LossValue DiceLoss(const ScoreMap& pred, const ScoreMap& gt) {
  CheckSameShape(gt, pred.width(), pred.height());
  const auto& p = pred.image().data();
  const auto& g = gt.image().data();

  double sum_pg = 0.0, sum_p2 = 0.0, sum_g2 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum_pg += static_cast<double>(p[i]) * g[i];
    sum_p2 += static_cast<double>(p[i]) * p[i];
    sum_g2 += static_cast<double>(g[i]) * g[i];
  }
  const double denom = sum_p2 + sum_g2 + kDiceEps;

  LossValue out;
  out.value = 1.0 - 2.0 * sum_pg / denom;
  out.grad.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.grad[i] = -(2.0 * g[i] * denom - 2.0 * sum_pg * 2.0 * p[i]) /
                  (denom * denom);
  }
  return out;
}

LossValue ComponentLoss(const LossValue& l_pm, const LossValue& l_ksm,
                        double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "lambda must lie in (0,1)");
  }
  LossValue out;
  out.value = lambda * l_pm.value + (1.0 - lambda) * l_ksm.value;
  out.grad.reserve(l_pm.grad.size() + l_ksm.grad.size());
  for (double g : l_pm.grad) out.grad.push_back(lambda * g);
  for (double g : l_ksm.grad) out.grad.push_back((1.0 - lambda) * g);
  return out;
}

std::vector<std::size_t> OhemSelect(const ScoreMap& pred, const BinaryMask& gt,
                                    int neg_ratio) {
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    throw Error(ErrorKind::kDimensionMismatch, "prediction/mask shape mismatch");
  }
  if (neg_ratio < 1) {
    throw Error(ErrorKind::kInvalidArgument, "neg_ratio must be >= 1");
  }
  const auto& p = pred.image().data();
  std::vector<std::size_t> positives, negatives;
  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * gt.width() + x;
      (gt.at(x, y) ? positives : negatives).push_back(i);
    }
  }
  // Hardest negatives = highest predicted score; index breaks ties.
  std::sort(negatives.begin(), negatives.end(),
            [&](std::size_t a, std::size_t b) {
              if (p[a] != p[b]) return p[a] > p[b];
              return a < b;
            });
  std::size_t keep;
  if (positives.empty()) {
    keep = std::max<std::size_t>(1, p.size() / 100);
  } else {
    keep = positives.size() * static_cast<std::size_t>(neg_ratio);
  }
  keep = std::min(keep, negatives.size());

  std::vector<std::size_t> selection = positives;
  selection.insert(selection.end(), negatives.begin(), negatives.begin() + keep);
  std::sort(selection.begin(), selection.end());
  return selection;
}

LossValue BceOverSelection(const ScoreMap& pred, const BinaryMask& gt,
                           const std::vector<std::size_t>& selection) {
  const auto& p = pred.image().data();
  LossValue out;
  out.grad.assign(p.size(), 0.0);
  if (selection.empty()) return out;

  for (std::size_t i : selection) {
    const double g = gt.at(static_cast<int>(i % gt.width()),
                           static_cast<int>(i / gt.width()))
                         ? 1.0
                         : 0.0;
    const double raw = p[i];
    const double pc = std::clamp(raw, kProbClamp, 1.0 - kProbClamp);
    out.value += -(g * std::log(pc) + (1.0 - g) * std::log(1.0 - pc));
    if (raw > kProbClamp && raw < 1.0 - kProbClamp) {
      out.grad[i] = (-g / pc + (1.0 - g) / (1.0 - pc)) /
                    static_cast<double>(selection.size());
    }
  }
  out.value /= static_cast<double>(selection.size());
  return out;
}

LossValue OhemBce(const ScoreMap& pred, const BinaryMask& gt, int neg_ratio) {
  return BceOverSelection(pred, gt, OhemSelect(pred, gt, neg_ratio));
}

LossValue TotalLoss(const LossValue& l_com, const LossValue& l_num_det,
                    const LossValue& l_num_reco) {
  LossValue out;
  out.value = l_com.value + l_num_det.value + l_num_reco.value;
  out.grad.reserve(l_com.grad.size() + l_num_det.grad.size() +
                   l_num_reco.grad.size());
  for (const auto* part : {&l_com, &l_num_det, &l_num_reco}) {
    out.grad.insert(out.grad.end(), part->grad.begin(), part->grad.end());
  }
  return out;
}

}  // namespace meterkit
