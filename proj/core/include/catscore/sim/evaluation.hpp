#pragma once

#include <Eigen/Dense>

#include <vector>

#include "catscore/sim/generator.hpp"

namespace catscore::sim {

/// Confusion counts of one ranking at every cutoff 1..p (index cutoff-1).
struct ConfusionCounts {
  std::vector<int> tp, fp, fn, tn;
  Eigen::Index de_count = 0;

  Eigen::Index p() const { return static_cast<Eigen::Index>(tp.size()); }
  double ppv(Eigen::Index cutoff) const;
  /// TP / (TP + FN); defined as 0 when there are no differential features.
  double power(Eigen::Index cutoff) const;
};

/// Throws InvalidInput unless ranking is a permutation of 0..p-1.
ConfusionCounts evaluate_ranking(const std::vector<Eigen::Index>& ranking,
                                 const TruthLabels& truth);

/// Per-replicate counts and their replicate averages of TP/(TP+FP) and
/// TP/(TP+FN). Averages are means of per-replicate ratios.
struct EvalCurves {
  std::vector<ConfusionCounts> replicates;
  std::vector<double> ppv_mean;
  std::vector<double> power_mean;

  Eigen::Index p() const { return static_cast<Eigen::Index>(ppv_mean.size()); }
};

/// Aggregates in the given order; throws InvalidInput on an empty list or
/// mismatched dimensions.
EvalCurves aggregate_curves(std::vector<ConfusionCounts> replicates);

}  // namespace catscore::sim
