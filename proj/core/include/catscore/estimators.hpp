#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "catscore/dataset.hpp"
#include "catscore/factored_correlation.hpp"

namespace catscore {

/// Per-feature two-group summaries.
struct GroupStats {
  Eigen::VectorXd mu1;
  Eigen::VectorXd mu2;
  Eigen::VectorXd pooled_var;   ///< denominator n1 + n2 - 2
  Eigen::VectorXd fold_change;  ///< mu1 - mu2
  Eigen::VectorXd t;            ///< Student t; +-inf when pooled_var is zero and fold change is not
  std::vector<bool> zero_variance;
  Eigen::Index n1 = 0;
  Eigen::Index n2 = 0;

  Eigen::Index p() const { return mu1.size(); }
  /// (1/n1 + 1/n2), the factor between pooled variance and the variance of the mean difference.
  double scale_factor() const;
};

struct ShrinkageVariance {
  Eigen::VectorXd v_shrink;
  double lambda = 1.0;
  double target = 0.0;  ///< median of the pooled variances
};

struct VarianceShrinkageOptions {
  /// Overrides the estimated intensity; must lie in [0, 1].
  std::optional<double> fixed_lambda;
};

struct CorrelationShrinkageOptions {
  /// Lower bound on gamma so that the shrinkage matrix stays invertible.
  double gamma_floor = 1e-4;
  /// Overrides the estimated intensity; must lie in (0, 1].
  std::optional<double> fixed_gamma;
};

GroupStats compute_group_stats(const LabeledDataset& data);

/// James-Stein shrinkage of the pooled variances toward their median.
ShrinkageVariance shrink_variances(const GroupStats& stats, const LabeledDataset& data,
                                   const VarianceShrinkageOptions& options = {});

/// Group-centered residuals scaled to unit pooled standard deviation (p x n).
/// Rows of zero-variance features are zero.
Eigen::MatrixXd standardized_residuals(const LabeledDataset& data, const GroupStats& stats);

/// Estimated sampling variance of a pooled moment computed as sum(w)/df,
/// given the sum of squared deviations of the n per-sample terms w from
/// their mean:
///
///   Var(sum(w)/df) ~= n / ((n-1) * df^2) * sum_k (w_k - mean(w))^2
///
/// With a single group (df = n-1) this is the familiar n/(n-1)^3 factor.
double pooled_moment_variance(double squared_deviation_sum, Eigen::Index n, Eigen::Index df);

/// James-Stein shrinkage correlation, returned in factored form.
///
/// Correlations come from group-centered residuals; the intensity is
/// sum_{i!=j} Var(r_ij) / sum_{i!=j} r_ij^2 clipped to [gamma_floor, 1].
/// Both sums are evaluated from the n x n Gram matrix, so cost is O(p*n^2)
/// and no p x p matrix is formed. Throws NumericalError when the residual
/// matrix has rank zero (use diagonal scores instead).
FactoredCorrelation shrink_correlation(const LabeledDataset& data,
                                       const CorrelationShrinkageOptions& options = {});

/// Same, reusing already computed group statistics.
FactoredCorrelation shrink_correlation(const LabeledDataset& data, const GroupStats& stats,
                                       const CorrelationShrinkageOptions& options = {});

}  // namespace catscore
