#pragma once

#include <Eigen/Dense>

namespace catscore {

/// A known, full-rank correlation matrix (simulation truth or user supplied).
///
/// The symmetric eigendecomposition is computed once on construction and
/// reused by every power application.
class OracleCorrelation {
 public:
  static constexpr double kDefaultEigenvalueFloor = 1e-10;

  /// Throws InvalidInput unless the matrix is square, symmetric (1e-12) with
  /// unit diagonal, and NumericalError if its smallest eigenvalue does not
  /// exceed eigenvalue_floor.
  explicit OracleCorrelation(Eigen::MatrixXd matrix,
                             double eigenvalue_floor = kDefaultEigenvalueFloor);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Eigen::Index p() const { return matrix_.rows(); }
  double entry(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  /// P^alpha v via the cached eigendecomposition.
  Eigen::VectorXd power_apply(double alpha, const Eigen::Ref<const Eigen::VectorXd>& v) const;

  /// Dense P^(-1/2). Not cached; callers applying it repeatedly keep the result.
  Eigen::MatrixXd inverse_sqrt() const;

 private:
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

}  // namespace catscore
