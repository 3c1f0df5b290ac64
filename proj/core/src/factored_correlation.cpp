#include "catscore/factored_correlation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "catscore/error.hpp"

namespace catscore {

namespace {
constexpr double kOrthonormalityTolerance = 1e-10;
}

FactoredCorrelation::FactoredCorrelation(double gamma, Eigen::MatrixXd basis,
                                         Eigen::VectorXd eigenvalues, std::vector<bool> active)
    : gamma_(gamma),
      basis_(std::move(basis)),
      eigenvalues_(std::move(eigenvalues)),
      active_(std::move(active)) {
  if (!(gamma_ > 0.0 && gamma_ <= 1.0)) {
    throw InvalidInput("shrinkage intensity gamma must lie in (0, 1], got " + std::to_string(gamma_));
  }
  if (basis_.cols() != eigenvalues_.size()) {
    throw InvalidInput("basis has " + std::to_string(basis_.cols()) + " columns but " +
                       std::to_string(eigenvalues_.size()) + " eigenvalues were given");
  }
  if (!basis_.allFinite() || !eigenvalues_.allFinite()) {
    throw InvalidInput("factored correlation contains non-finite values");
  }
  if (eigenvalues_.size() > 0 && eigenvalues_.minCoeff() < 0.0) {
    throw InvalidInput("eigenvalues must be nonnegative");
  }
  if (active_.empty()) active_.assign(static_cast<std::size_t>(basis_.rows()), true);
  if (static_cast<Eigen::Index>(active_.size()) != basis_.rows()) {
    throw InvalidInput("active mask length does not match feature count");
  }

  const Eigen::Index m = basis_.cols();
  if (m > 0) {
    const Eigen::MatrixXd gram = basis_.transpose() * basis_;
    const double err = (gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (err > kOrthonormalityTolerance) {
      throw InvalidInput("basis columns are not orthonormal (max |U^T U - I| = " +
                         std::to_string(err) + ")");
    }
  }
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    if (!is_active(i) && m > 0 && basis_.row(i).cwiseAbs().maxCoeff() != 0.0) {
      throw InvalidInput("inactive feature " + std::to_string(i + 1) + " has a nonzero basis row");
    }
  }
}

FactoredCorrelation FactoredCorrelation::identity(Eigen::Index p) {
  return FactoredCorrelation(1.0, Eigen::MatrixXd::Zero(p, 0), Eigen::VectorXd::Zero(0));
}

FactoredCorrelation FactoredCorrelation::with_gamma(double gamma) const {
  return FactoredCorrelation(gamma, basis_, eigenvalues_, active_);
}

double FactoredCorrelation::entry(Eigen::Index i, Eigen::Index j) const {
  if (i == j && !is_active(i)) return 1.0;
  double low_rank = 0.0;
  for (Eigen::Index k = 0; k < rank(); ++k) {
    low_rank += basis_(i, k) * eigenvalues_(k) * basis_(j, k);
  }
  return (i == j ? gamma_ : 0.0) + (1.0 - gamma_) * low_rank;
}

Eigen::VectorXd FactoredCorrelation::row(Eigen::Index i) const {
  const Eigen::VectorXd weighted = basis_.row(i).transpose().cwiseProduct(eigenvalues_);
  Eigen::VectorXd r = (1.0 - gamma_) * (basis_ * weighted);
  r(i) = is_active(i) ? r(i) + gamma_ : 1.0;
  return r;
}

Eigen::MatrixXd FactoredCorrelation::dense() const {
  Eigen::MatrixXd r = (1.0 - gamma_) * basis_ * eigenvalues_.asDiagonal() * basis_.transpose();
  for (Eigen::Index i = 0; i < p(); ++i) r(i, i) = is_active(i) ? r(i, i) + gamma_ : 1.0;
  return r;
}

double FactoredCorrelation::max_unit_diagonal_deviation() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < p(); ++i) worst = std::max(worst, std::abs(entry(i, i) - 1.0));
  return worst;
}

}  // namespace catscore
