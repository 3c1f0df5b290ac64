#include "catscore/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "catscore/error.hpp"

namespace catscore {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double median(Eigen::VectorXd values) {
  const auto n = static_cast<std::size_t>(values.size());
  double* first = values.data();
  double* mid = first + n / 2;
  std::nth_element(first, mid, first + n);
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(first, mid);
  return 0.5 * (lower + upper);
}

}  // namespace

double GroupStats::scale_factor() const {
  return 1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2);
}

GroupStats compute_group_stats(const LabeledDataset& data) {
  const Eigen::Index p = data.p();
  const Eigen::Index n = data.n();
  const auto& x = data.values();
  const auto& labels = data.labels();

  GroupStats s;
  s.n1 = data.n1();
  s.n2 = data.n2();
  s.mu1 = Eigen::VectorXd::Zero(p);
  s.mu2 = Eigen::VectorXd::Zero(p);
  s.pooled_var = Eigen::VectorXd::Zero(p);
  s.zero_variance.assign(static_cast<std::size_t>(p), false);

  for (Eigen::Index k = 0; k < n; ++k) {
    if (labels[static_cast<std::size_t>(k)] == Group::kFirst) {
      s.mu1 += x.col(k);
    } else {
      s.mu2 += x.col(k);
    }
  }
  s.mu1 /= static_cast<double>(s.n1);
  s.mu2 /= static_cast<double>(s.n2);

  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& mu = labels[static_cast<std::size_t>(k)] == Group::kFirst ? s.mu1 : s.mu2;
    s.pooled_var += (x.col(k) - mu).cwiseAbs2();
  }
  s.pooled_var /= static_cast<double>(n - 2);

  s.fold_change = s.mu1 - s.mu2;
  s.t.resize(p);
  const double scale = s.scale_factor();
  for (Eigen::Index i = 0; i < p; ++i) {
    // Rounding in the means of a constant row leaves residuals of order eps*|x|.
    const double magnitude = x.row(i).cwiseAbs().maxCoeff();
    const double noise = 4.0 * static_cast<double>(n) * kEps * magnitude;
    if (s.pooled_var(i) <= noise * noise) {
      s.pooled_var(i) = 0.0;
      s.zero_variance[static_cast<std::size_t>(i)] = true;
      if (std::abs(s.fold_change(i)) <= noise) {
        s.t(i) = 0.0;
      } else {
        s.t(i) = std::copysign(std::numeric_limits<double>::infinity(), s.fold_change(i));
      }
    } else {
      s.t(i) = s.fold_change(i) / std::sqrt(scale * s.pooled_var(i));
    }
  }
  return s;
}

double pooled_moment_variance(double squared_deviation_sum, Eigen::Index n, Eigen::Index df) {
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(df);
  return nn / ((nn - 1.0) * dd * dd) * squared_deviation_sum;
}

ShrinkageVariance shrink_variances(const GroupStats& stats, const LabeledDataset& data,
                                   const VarianceShrinkageOptions& options) {
  const Eigen::Index p = stats.p();
  if (p < 2) throw InvalidInput("variance shrinkage needs at least 2 features");
  if (p != data.p()) throw InvalidInput("group statistics do not match the dataset");

  ShrinkageVariance out;
  out.target = median(stats.pooled_var);

  if (options.fixed_lambda) {
    const double lambda = *options.fixed_lambda;
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidInput("lambda must lie in [0, 1]");
    out.lambda = lambda;
  } else {
    const Eigen::Index n = data.n();
    const auto& x = data.values();
    const auto& labels = data.labels();
    double variance_sum = 0.0;
    double deviation_sum = 0.0;
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const double mu = labels[static_cast<std::size_t>(k)] == Group::kFirst ? stats.mu1(i)
                                                                               : stats.mu2(i);
        const double r = x(i, k) - mu;
        w(k) = r * r;
      }
      const double w_mean = w.mean();
      variance_sum += pooled_moment_variance((w.array() - w_mean).square().sum(), n, n - 2);
      const double dev = stats.pooled_var(i) - out.target;
      deviation_sum += dev * dev;
    }
    out.lambda = deviation_sum > 0.0 ? std::clamp(variance_sum / deviation_sum, 0.0, 1.0) : 1.0;
  }

  out.v_shrink = out.lambda * out.target + (1.0 - out.lambda) * stats.pooled_var.array();
  if (out.lambda == 0.0) out.v_shrink = stats.pooled_var;
  return out;
}

Eigen::MatrixXd standardized_residuals(const LabeledDataset& data, const GroupStats& stats) {
  const Eigen::Index p = data.p();
  const Eigen::Index n = data.n();
  const auto& labels = data.labels();
  Eigen::MatrixXd z(p, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& mu = labels[static_cast<std::size_t>(k)] == Group::kFirst ? stats.mu1 : stats.mu2;
    z.col(k) = data.values().col(k) - mu;
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    if (stats.zero_variance[static_cast<std::size_t>(i)]) {
      z.row(i).setZero();
    } else {
      z.row(i) /= std::sqrt(stats.pooled_var(i));
    }
  }
  return z;
}

FactoredCorrelation shrink_correlation(const LabeledDataset& data,
                                       const CorrelationShrinkageOptions& options) {
  return shrink_correlation(data, compute_group_stats(data), options);
}

FactoredCorrelation shrink_correlation(const LabeledDataset& data, const GroupStats& stats,
                                       const CorrelationShrinkageOptions& options) {
  const Eigen::Index p = data.p();
  const Eigen::Index n = data.n();
  if (n < 3) throw InvalidInput("correlation shrinkage needs at least 3 samples");
  if (stats.p() != p) throw InvalidInput("group statistics do not match the dataset");
  if (!(options.gamma_floor > 0.0 && options.gamma_floor <= 1.0)) {
    throw InvalidInput("gamma floor must lie in (0, 1]");
  }
  const Eigen::Index df = n - 2;
  const Eigen::MatrixXd z = standardized_residuals(data, stats);

  double gamma = 1.0;
  if (options.fixed_gamma) {
    gamma = *options.fixed_gamma;
    if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidInput("gamma must lie in (0, 1]");
  } else {
    // Pairwise sums over i != j via the n x n Gram matrix G = Z^T Z:
    //   sum_{i!=j} (z_i . z_j)^2          = ||G||_F^2 - sum_i |z_i|^4
    //   sum_{i!=j} sum_k z_ik^2 z_jk^2    = sum_k G_kk^2 - sum_{i,k} z_ik^4
    // and per pair sum_k (w_k - mean w)^2 = sum_k w_k^2 - (z_i . z_j)^2 / n.
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(z.transpose());
    gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();
    const double row_norm4 = z.rowwise().squaredNorm().squaredNorm();
    const double cross = gram.squaredNorm() - row_norm4;
    const double product_sq = gram.diagonal().squaredNorm() - z.array().square().square().sum();
    const double dd = static_cast<double>(df);
    const double sum_r2 = cross / (dd * dd);
    const double sum_var = pooled_moment_variance(product_sq - cross / static_cast<double>(n), n, df);
    if (sum_r2 > 0.0) gamma = std::clamp(sum_var / sum_r2, 0.0, 1.0);
    gamma = std::max(gamma, options.gamma_floor);
  }

  std::vector<bool> active(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = !stats.zero_variance[i];

  Eigen::BDCSVD<Eigen::MatrixXd> svd(z, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double s_max = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = static_cast<double>(std::max(p, n)) * 64.0 * kEps * s_max;
  Eigen::Index m = 0;
  while (m < sv.size() && sv(m) > tol) ++m;
  if (m == 0) {
    throw NumericalError(
        "empirical correlation has rank zero; fall back to diagonal (shrink-t) scores");
  }
  m = std::min(m, df);

  Eigen::MatrixXd basis = svd.matrixU().leftCols(m);
  for (Eigen::Index i = 0; i < p; ++i) {
    if (!active[static_cast<std::size_t>(i)]) basis.row(i).setZero();
  }
  Eigen::VectorXd d = sv.head(m).array().square() / static_cast<double>(df);
  return FactoredCorrelation(gamma, std::move(basis), std::move(d), std::move(active));
}

}  // namespace catscore
