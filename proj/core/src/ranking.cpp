#include "catscore/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "catscore/error.hpp"

namespace catscore {

std::vector<Eigen::Index> ranking_order(const Eigen::VectorXd& scores) {
  if (scores.hasNaN()) throw InvalidInput("cannot rank NaN scores");
  std::vector<Eigen::Index> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(scores(a)) > std::abs(scores(b));
  });
  return order;
}

std::vector<RankedFeature> rank_features(const ScoreVector& scores) {
  const auto order = ranking_order(scores.scores);
  std::vector<RankedFeature> ranked;
  ranked.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranked.push_back({static_cast<Eigen::Index>(r + 1), order[r], scores.scores(order[r])});
  }
  return ranked;
}

}  // namespace catscore
