#include "meterkit/ctc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace meterkit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogSumExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double LogSumExp(double a, double b, double c) {
  return LogSumExp(LogSumExp(a, b), c);
}

double SafeLog(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

void ValidateLabel(const Label& label, int classes, int blank_index) {
  if (label.indices.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "label must be nonempty");
  }
  for (int idx : label.indices) {
    if (idx < 0 || idx >= classes || idx == blank_index) {
      throw Error(ErrorKind::kInvalidArgument, "label index out of range");
    }
  }
}

int RequiredTimesteps(const Label& label) {
  int repeats = 0;
  for (std::size_t i = 1; i < label.indices.size(); ++i) {
    if (label.indices[i] == label.indices[i - 1]) ++repeats;
  }
  return static_cast<int>(label.indices.size()) + repeats;
}

}  // namespace

Alphabet Alphabet::Default() {
  Alphabet a;
  for (int d = 0; d <= 9; ++d) a.symbols.push_back(std::string(1, '0' + d));
  a.symbols.push_back(".");
  a.symbols.push_back("<blank>");
  a.blank_index = 11;
  return a;
}

ProbMatrix::ProbMatrix(int timesteps, int classes, std::vector<double> rows)
    : t_(timesteps), c_(classes), rows_(std::move(rows)) {
  if (t_ < 1 || c_ < 2 ||
      rows_.size() != static_cast<std::size_t>(t_) * c_) {
    throw Error(ErrorKind::kInvalidArgument, "malformed probability matrix");
  }
  for (int t = 0; t < t_; ++t) {
    double sum = 0.0;
    for (int c = 0; c < c_; ++c) {
      const double v = at(t, c);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "probability outside [0,1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorKind::kInvalidArgument, "row does not sum to 1");
    }
  }
}

LossValue CtcLoss(const ProbMatrix& probs, const Label& label,
                  int blank_index) {
  const int t_count = probs.timesteps();
  const int c_count = probs.classes();
  if (blank_index < 0 || blank_index >= c_count) {
    throw Error(ErrorKind::kInvalidArgument, "blank index out of range");
  }
  ValidateLabel(label, c_count, blank_index);
  if (t_count < RequiredTimesteps(label)) {
    throw Error(ErrorKind::kInfeasibleLabel,
                "label needs more timesteps than available");
  }

  // Blank-extended label: b l1 b l2 ... lL b.
  const int ext = 2 * static_cast<int>(label.indices.size()) + 1;
  std::vector<int> sym(ext, blank_index);
  for (std::size_t i = 0; i < label.indices.size(); ++i) {
    sym[2 * i + 1] = label.indices[i];
  }
  auto can_skip = [&](int s) {
    // Skip transition s-2 -> s allowed between distinct non-blank symbols.
    return s >= 2 && sym[s] != blank_index && sym[s] != sym[s - 2];
  };

  // la: log alpha including y_t; la_bar: transition sums before the y factor.
  std::vector<std::vector<double>> la(t_count, std::vector<double>(ext, kNegInf));
  std::vector<std::vector<double>> la_bar = la;
  la_bar[0][0] = 0.0;
  if (ext > 1) la_bar[0][1] = 0.0;
  for (int s = 0; s < ext; ++s) {
    if (la_bar[0][s] != kNegInf) {
      la[0][s] = la_bar[0][s] + SafeLog(probs.at(0, sym[s]));
    }
  }
  for (int t = 1; t < t_count; ++t) {
    for (int s = 0; s < ext; ++s) {
      double acc = la[t - 1][s];
      if (s >= 1) acc = LogSumExp(acc, la[t - 1][s - 1]);
      if (can_skip(s)) acc = LogSumExp(acc, la[t - 1][s - 2]);
      la_bar[t][s] = acc;
      la[t][s] = acc + SafeLog(probs.at(t, sym[s]));
    }
  }

  double log_p = la[t_count - 1][ext - 1];
  if (ext > 1) log_p = LogSumExp(log_p, la[t_count - 1][ext - 2]);

  LossValue out;
  out.grad.assign(probs.rows().size(), 0.0);
  if (log_p == kNegInf) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = -log_p;

  // lb_bar: log probability of the suffix strictly after t given state s.
  std::vector<std::vector<double>> lb(t_count, std::vector<double>(ext, kNegInf));
  std::vector<std::vector<double>> lb_bar = lb;
  lb_bar[t_count - 1][ext - 1] = 0.0;
  if (ext > 1) lb_bar[t_count - 1][ext - 2] = 0.0;
  for (int s = 0; s < ext; ++s) {
    if (lb_bar[t_count - 1][s] != kNegInf) {
      lb[t_count - 1][s] =
          lb_bar[t_count - 1][s] + SafeLog(probs.at(t_count - 1, sym[s]));
    }
  }
  for (int t = t_count - 2; t >= 0; --t) {
    for (int s = 0; s < ext; ++s) {
      double acc = lb[t + 1][s];
      if (s + 1 < ext) acc = LogSumExp(acc, lb[t + 1][s + 1]);
      if (s + 2 < ext && can_skip(s + 2)) acc = LogSumExp(acc, lb[t + 1][s + 2]);
      lb_bar[t][s] = acc;
      lb[t][s] = acc + SafeLog(probs.at(t, sym[s]));
    }
  }

  // d loss / d y_t(k) = -exp(logsum_{s: sym[s]=k}(la_bar + lb_bar) - log_p).
  for (int t = 0; t < t_count; ++t) {
    std::vector<double> per_class(c_count, kNegInf);
    for (int s = 0; s < ext; ++s) {
      per_class[sym[s]] =
          LogSumExp(per_class[sym[s]], la_bar[t][s] + lb_bar[t][s]);
    }
    for (int c = 0; c < c_count; ++c) {
      if (per_class[c] != kNegInf) {
        out.grad[static_cast<std::size_t>(t) * c_count + c] =
            -std::exp(per_class[c] - log_p);
      }
    }
  }
  return out;
}

std::string GreedyDecode(const ProbMatrix& probs, const Alphabet& alphabet) {
  if (static_cast<int>(alphabet.symbols.size()) != probs.classes() ||
      alphabet.blank_index < 0 ||
      alphabet.blank_index >= static_cast<int>(alphabet.symbols.size())) {
    throw Error(ErrorKind::kInvalidArgument, "alphabet/matrix mismatch");
  }
  std::string out;
  int prev = -1;
  for (int t = 0; t < probs.timesteps(); ++t) {
    int best = 0;
    for (int c = 1; c < probs.classes(); ++c) {
      if (probs.at(t, c) > probs.at(t, best)) best = c;
    }
    if (best != prev && best != alphabet.blank_index) {
      out += alphabet.symbols[best];
    }
    prev = best;
  }
  return out;
}

double BruteForceProb(const ProbMatrix& probs, const Label& label,
                      int blank_index) {
  const int t_count = probs.timesteps();
  const int c_count = probs.classes();
  ValidateLabel(label, c_count, blank_index);
  double paths = 1.0;
  for (int t = 0; t < t_count; ++t) {
    paths *= c_count;
    if (paths > 1e6) {
      throw Error(ErrorKind::kInstanceTooLarge, "C^T exceeds 1e6 paths");
    }
  }

  std::vector<int> path(t_count, 0);
  std::vector<int> collapsed;
  double total = 0.0;
  while (true) {
    double prob = 1.0;
    for (int t = 0; t < t_count; ++t) prob *= probs.at(t, path[t]);
    if (prob > 0.0) {
      collapsed.clear();
      int prev = -1;
      for (int t = 0; t < t_count; ++t) {
        if (path[t] != prev && path[t] != blank_index) {
          collapsed.push_back(path[t]);
        }
        prev = path[t];
      }
      if (collapsed == label.indices) total += prob;
    }
    int t = t_count - 1;
    while (t >= 0 && ++path[t] == c_count) path[t--] = 0;
    if (t < 0) break;
  }
  return total;
}

double ParseNumeric(const std::string& decoded) {
  if (decoded.empty()) {
    throw Error(ErrorKind::kUnparseableNumber, "empty token string");
  }
  int dots = 0;
  for (char c : decoded) {
    if (c == '.') {
      ++dots;
    } else if (c < '0' || c > '9') {
      throw Error(ErrorKind::kUnparseableNumber,
                  "unexpected character in '" + decoded + "'");
    }
  }
  if (dots > 1 || decoded.front() == '.' || decoded.back() == '.') {
    throw Error(ErrorKind::kUnparseableNumber, "malformed decimal '" +
                                                   decoded + "'");
  }
  return std::stod(decoded);
}

}  // namespace meterkit
