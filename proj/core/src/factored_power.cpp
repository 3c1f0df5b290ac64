#include "catscore/factored_power.hpp"

#include <cmath>

#include "catscore/error.hpp"

namespace catscore {

namespace {

// Diagonal of I_m - (I_m + M)^alpha.
Eigen::VectorXd low_rank_coefficients(const FactoredCorrelation& corr, double alpha) {
  const double g = corr.gamma();
  const double ratio = (1.0 - g) / g;
  Eigen::VectorXd c(corr.rank());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    c(k) = 1.0 - std::pow(1.0 + ratio * corr.eigenvalues()(k), alpha);
  }
  return c;
}

}  // namespace

Eigen::MatrixXd factored_power_apply_columns(const FactoredCorrelation& corr, double alpha,
                                     const Eigen::Ref<const Eigen::MatrixXd>& vs) {
  if (!std::isfinite(alpha)) throw InvalidInput("matrix power exponent must be finite");
  if (vs.rows() != corr.p()) {
    throw InvalidInput("vector length " + std::to_string(vs.rows()) +
                       " does not match correlation dimension " + std::to_string(corr.p()));
  }
  if (!vs.allFinite()) throw InvalidInput("vector to decorrelate must be finite");

  const Eigen::MatrixXd& u = corr.basis();
  const Eigen::VectorXd coef = low_rank_coefficients(corr, alpha);
  const Eigen::MatrixXd projected = coef.asDiagonal() * (u.transpose() * vs);
  Eigen::MatrixXd out = vs - u * projected;
  out *= std::pow(corr.gamma(), alpha);
  for (Eigen::Index i = 0; i < corr.p(); ++i) {
    if (!corr.is_active(i)) out.row(i) = vs.row(i);
  }
  return out;
}

Eigen::VectorXd factored_power_apply(const FactoredCorrelation& corr, double alpha,
                                     const Eigen::Ref<const Eigen::VectorXd>& v) {
  return factored_power_apply_columns(corr, alpha, v).col(0);
}

}  // namespace catscore
