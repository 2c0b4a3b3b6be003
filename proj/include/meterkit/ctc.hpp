#ifndef METERKIT_CTC_HPP_
#define METERKIT_CTC_HPP_

#include <string>
#include <vector>

#include "meterkit/error.hpp"
#include "meterkit/losses.hpp"

namespace meterkit {

struct Alphabet {
  std::vector<std::string> symbols;
  int blank_index = 0;

  // Digits 0-9, '.', and the blank at index 11.
  static Alphabet Default();
};

// T rows of C class probabilities; every row sums to 1 within 1e-9.
class ProbMatrix {
 public:
  ProbMatrix(int timesteps, int classes, std::vector<double> rows);

  int timesteps() const { return t_; }
  int classes() const { return c_; }
  double at(int t, int c) const {
    return rows_[static_cast<std::size_t>(t) * c_ + c];
  }
  const std::vector<double>& rows() const { return rows_; }

 private:
  int t_;
  int c_;
  std::vector<double> rows_;
};

// Non-blank class indices. Feasible for T timesteps iff
// T >= length + (number of adjacent equal pairs).
struct Label {
  std::vector<int> indices;
};

// Negative log probability, over all length-T paths, of collapsing (merge
// repeats, drop blanks) to the label. Log-space forward recursion; gradient
// with respect to every probability entry via forward-backward. A label no
// path can produce yields +inf with a zero gradient.
LossValue CtcLoss(const ProbMatrix& probs, const Label& label, int blank_index);

// Per-row argmax (ties to the lowest index), collapse adjacent repeats,
// drop blanks.
std::string GreedyDecode(const ProbMatrix& probs, const Alphabet& alphabet);

// Enumerates all C^T paths; oracle counterpart of CtcLoss.
double BruteForceProb(const ProbMatrix& probs, const Label& label,
                      int blank_index);

// Digits with at most one interior '.' parsed as a nonnegative decimal.
double ParseNumeric(const std::string& decoded);

}  // namespace meterkit

#endif  // METERKIT_CTC_HPP_
