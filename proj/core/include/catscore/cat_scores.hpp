#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

#include "catscore/estimators.hpp"
#include "catscore/factored_correlation.hpp"
#include "catscore/oracle_correlation.hpp"

namespace catscore {

enum class ScoreMethod { kFold, kT, kShrinkT, kCat, kShrinkCat, kGroupedCat, kOracleCat };

std::string_view to_string(ScoreMethod method);
/// Throws InvalidInput for unknown names.
ScoreMethod parse_score_method(std::string_view name);
bool is_cat_variant(ScoreMethod method);

/// Per-feature ranking statistic. Entries are finite except for +-inf
/// sentinels of zero-variance features with a nonzero mean difference.
struct ScoreVector {
  ScoreMethod method = ScoreMethod::kT;
  Eigen::VectorXd scores;
  std::vector<std::string> feature_names;

  Eigen::Index size() const { return scores.size(); }
};

ScoreVector fold_change_scores(const GroupStats& stats, std::vector<std::string> names);
ScoreVector t_scores(const GroupStats& stats, std::vector<std::string> names);

/// t-scores with the pooled variance replaced by its shrinkage estimate.
ScoreVector shrink_t_scores(const GroupStats& stats, const ShrinkageVariance& variances,
                            std::vector<std::string> names);

/// (R_shrink)^(-1/2) t_shrink through the factored power identity.
/// Non-finite entries bypass decorrelation and are treated as zero in it.
ScoreVector cat_score_shrinkage(const ScoreVector& t_shrink, const FactoredCorrelation& corr);

/// R^(-1/2) t with the unshrunk empirical correlation. Only defined when the
/// empirical correlation is full rank on the active features (n - 2 >= p);
/// throws NumericalError otherwise.
ScoreVector cat_score_empirical(const ScoreVector& t, const FactoredCorrelation& corr);

/// P^(-1/2) t with a known correlation matrix.
ScoreVector cat_score_oracle(const ScoreVector& t, const OracleCorrelation& oracle);

}  // namespace catscore
