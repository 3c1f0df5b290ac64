#pragma once

#include <Eigen/Dense>

#include <vector>

namespace catscore {

/// Shrinkage correlation gamma*I + (1-gamma)*R held as R = U diag(d) U^T.
///
/// U is p x m with orthonormal columns and m = rank(R). Features flagged
/// inactive (zero variance) carry a zero row in U and are treated as
/// uncorrelated with unit variance, so the implied matrix is
///
///   gamma*I + (1-gamma) * (U diag(d) U^T + diag(inactive))
///
/// and its diagonal is exactly one whenever R has unit diagonal on the
/// active features. The dense p x p matrix is only formed on request.
class FactoredCorrelation {
 public:
  /// Throws InvalidInput if gamma is outside (0, 1], if d has a negative
  /// entry, if U is not column-orthonormal (tolerance 1e-10), or if an
  /// inactive feature has a nonzero row in U. An empty mask means all active.
  FactoredCorrelation(double gamma, Eigen::MatrixXd basis, Eigen::VectorXd eigenvalues,
                      std::vector<bool> active = {});

  /// gamma = 1 and rank zero: the identity matrix.
  static FactoredCorrelation identity(Eigen::Index p);

  double gamma() const { return gamma_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const std::vector<bool>& active() const { return active_; }
  bool is_active(Eigen::Index i) const { return active_[static_cast<std::size_t>(i)]; }

  Eigen::Index p() const { return basis_.rows(); }
  Eigen::Index rank() const { return basis_.cols(); }

  /// Same factors with a different shrinkage intensity.
  FactoredCorrelation with_gamma(double gamma) const;

  /// Entry (i, j) of the implied shrinkage matrix, O(m).
  double entry(Eigen::Index i, Eigen::Index j) const;

  /// Row i of the implied shrinkage matrix, O(p*m).
  Eigen::VectorXd row(Eigen::Index i) const;

  /// Dense p x p implied matrix. Intended for small p and for testing.
  Eigen::MatrixXd dense() const;

  /// Largest |diag - 1| of the implied matrix, O(p*m).
  double max_unit_diagonal_deviation() const;

 private:
  double gamma_;
  Eigen::MatrixXd basis_;
  Eigen::VectorXd eigenvalues_;
  std::vector<bool> active_;
};

}  // namespace catscore
