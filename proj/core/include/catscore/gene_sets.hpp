#pragma once

#include <Eigen/Dense>

#include <vector>

#include "catscore/cat_scores.hpp"
#include "catscore/factored_correlation.hpp"
#include "catscore/oracle_correlation.hpp"

namespace catscore {

enum class GeneSetOrigin { kNeighborhood, kUserDefined };

/// Nonempty set of distinct feature indices, stored sorted.
class GeneSet {
 public:
  /// Throws InvalidInput on an empty set or repeated indices.
  explicit GeneSet(std::vector<Eigen::Index> members,
                   GeneSetOrigin origin = GeneSetOrigin::kUserDefined);

  const std::vector<Eigen::Index>& members() const { return members_; }
  GeneSetOrigin origin() const { return origin_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Eigen::Index i) const;

 private:
  std::vector<Eigen::Index> members_;
  GeneSetOrigin origin_;
};

inline constexpr double kDefaultNeighborhoodThreshold = 0.85;

/// Sum of squared cat scores over the set. For the full feature set and
/// shrink-cat input this equals t^T (R_shrink)^-1 t.
double hotelling_t2(const ScoreVector& cat, const GeneSet& set);

/// score_i = sign(cat_i) * sqrt(sum_{g in sets[i]} cat_g^2), with sign(0) = +1.
/// Each feature is scored over its own set; overlapping sets are not merged.
ScoreVector grouped_cat_score(const ScoreVector& cat, const std::vector<GeneSet>& sets);

/// sets[i] = {i} + {j != i : |r_ij| >= threshold}. Rows of the factored
/// matrix are rebuilt one at a time, so memory stays O(p*m).
std::vector<GeneSet> correlation_neighborhoods(const FactoredCorrelation& corr, double threshold);
std::vector<GeneSet> correlation_neighborhoods(const OracleCorrelation& corr, double threshold);

}  // namespace catscore
