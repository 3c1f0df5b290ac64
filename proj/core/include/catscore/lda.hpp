#pragma once

#include <Eigen/Dense>

#include <variant>

#include "catscore/dataset.hpp"
#include "catscore/estimators.hpp"
#include "catscore/factored_correlation.hpp"
#include "catscore/oracle_correlation.hpp"

namespace catscore {

using CorrelationModel = std::variant<FactoredCorrelation, OracleCorrelation>;

/// Two-class linear discriminant with covariance V^(1/2) P V^(1/2).
struct LDAModel {
  Eigen::VectorXd mu1;
  Eigen::VectorXd mu2;
  Eigen::VectorXd variances;
  CorrelationModel correlation;
  double log_prior_ratio = 0.0;  ///< log(pi1 / pi2)

  Eigen::Index p() const { return mu1.size(); }
};

struct LdaPrediction {
  double delta;
  Group group;
};

/// P^(-1/2) V^(-1/2) (mu1 - mu2).
Eigen::VectorXd lda_feature_weights(const LDAModel& model);

/// Mahalanobis-transformed distance of x to the midpoint of the centroids.
Eigen::VectorXd lda_distance(const LDAModel& model, const Eigen::Ref<const Eigen::VectorXd>& x);

/// delta = w^T distance(x) + log(pi1/pi2); group 1 iff delta >= 0.
/// Throws InvalidInput on dimension mismatch or nonpositive variances.
LdaPrediction lda_predict(const LDAModel& model, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Fits centroids, shrinkage variances and shrinkage correlation; priors
/// default to the group proportions n_k / n.
LDAModel fit_lda(const LabeledDataset& data, const CorrelationShrinkageOptions& options = {});

}  // namespace catscore
