#pragma once

#include <Eigen/Dense>

#include "catscore/factored_correlation.hpp"

namespace catscore {

/// Applies the alpha-th power of the implied shrinkage matrix to v.
///
/// With Z = (gamma*I + (1-gamma)*U diag(d) U^T) / gamma = I + U M U^T and
/// M = ((1-gamma)/gamma) diag(d), the power is
///
///   Z^alpha = I - U (I_m - (I_m + M)^alpha) U^T
///
/// so the result is gamma^alpha * (v - U (I_m - (I_m + M)^alpha) U^T v).
/// Cost is O(p*m); no p x p intermediate is formed. Inactive features pass
/// through unchanged. Throws InvalidInput on non-finite alpha or v, or on a
/// length mismatch.
Eigen::VectorXd factored_power_apply(const FactoredCorrelation& corr, double alpha,
                                     const Eigen::Ref<const Eigen::VectorXd>& v);

/// Column-wise version for a p x k block of vectors.
Eigen::MatrixXd factored_power_apply_columns(const FactoredCorrelation& corr, double alpha,
                                     const Eigen::Ref<const Eigen::MatrixXd>& vs);

}  // namespace catscore
