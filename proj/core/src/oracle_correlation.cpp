#include "catscore/oracle_correlation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "catscore/error.hpp"

namespace catscore {

OracleCorrelation::OracleCorrelation(Eigen::MatrixXd matrix, double eigenvalue_floor)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw InvalidInput("correlation matrix must be square and nonempty");
  }
  if (!matrix_.allFinite()) throw InvalidInput("correlation matrix has non-finite entries");
  const double asym = (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw InvalidInput("correlation matrix is not symmetric (max asymmetry " +
                       std::to_string(asym) + ")");
  }
  const double diag_err = (matrix_.diagonal().array() - 1.0).abs().maxCoeff();
  if (diag_err > 1e-12) throw InvalidInput("correlation matrix must have unit diagonal");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(matrix_);
  if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
  if (eigenvalues_.minCoeff() <= eigenvalue_floor) {
    throw NumericalError("correlation matrix is near-singular (smallest eigenvalue " +
                         std::to_string(eigenvalues_.minCoeff()) + ")");
  }
}

Eigen::VectorXd OracleCorrelation::power_apply(double alpha,
                                               const Eigen::Ref<const Eigen::VectorXd>& v) const {
  if (v.size() != p()) throw InvalidInput("vector length does not match correlation dimension");
  const Eigen::VectorXd scaled = eigenvalues_.array().pow(alpha).matrix().cwiseProduct(
      eigenvectors_.transpose() * v);
  return eigenvectors_ * scaled;
}

Eigen::MatrixXd OracleCorrelation::inverse_sqrt() const {
  return eigenvectors_ * eigenvalues_.array().rsqrt().matrix().asDiagonal() *
         eigenvectors_.transpose();
}

}  // namespace catscore
