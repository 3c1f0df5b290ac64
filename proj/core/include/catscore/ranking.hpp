#pragma once

#include <Eigen/Dense>

#include <vector>

#include "catscore/cat_scores.hpp"

namespace catscore {

struct RankedFeature {
  Eigen::Index rank;     ///< 1-based
  Eigen::Index feature;  ///< 0-based index into the score vector
  double score;
};

/// Orders features by decreasing |score|; infinite sentinels come first and
/// ties go to the lower feature index. Throws InvalidInput on NaN.
std::vector<RankedFeature> rank_features(const ScoreVector& scores);

/// Feature indices in rank order.
std::vector<Eigen::Index> ranking_order(const Eigen::VectorXd& scores);

}  // namespace catscore
