#include "catscore/cat_scores.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "catscore/error.hpp"
#include "catscore/factored_power.hpp"

namespace catscore {

namespace {

constexpr std::array<std::pair<ScoreMethod, std::string_view>, 7> kMethodNames{{
    {ScoreMethod::kFold, "fold"},
    {ScoreMethod::kT, "t"},
    {ScoreMethod::kShrinkT, "shrink-t"},
    {ScoreMethod::kCat, "cat"},
    {ScoreMethod::kShrinkCat, "shrink-cat"},
    {ScoreMethod::kGroupedCat, "grouped-cat"},
    {ScoreMethod::kOracleCat, "oracle-cat"},
}};

// Splits v into a finite part for decorrelation and remembers the sentinels.
Eigen::VectorXd finite_part(const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out(i))) out(i) = 0.0;
  }
  return out;
}

void restore_sentinels(const Eigen::VectorXd& original, Eigen::VectorXd& decorrelated) {
  for (Eigen::Index i = 0; i < original.size(); ++i) {
    if (!std::isfinite(original(i))) decorrelated(i) = original(i);
  }
}

void check_names(const std::vector<std::string>& names, Eigen::Index p) {
  if (!names.empty() && static_cast<Eigen::Index>(names.size()) != p) {
    throw InvalidInput("feature name count does not match score length");
  }
}

}  // namespace

std::string_view to_string(ScoreMethod method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

ScoreMethod parse_score_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  throw InvalidInput("unknown score method '" + std::string(name) + "'");
}

bool is_cat_variant(ScoreMethod method) {
  return method == ScoreMethod::kCat || method == ScoreMethod::kShrinkCat ||
         method == ScoreMethod::kGroupedCat || method == ScoreMethod::kOracleCat;
}

ScoreVector fold_change_scores(const GroupStats& stats, std::vector<std::string> names) {
  check_names(names, stats.p());
  return {ScoreMethod::kFold, stats.fold_change, std::move(names)};
}

ScoreVector t_scores(const GroupStats& stats, std::vector<std::string> names) {
  check_names(names, stats.p());
  return {ScoreMethod::kT, stats.t, std::move(names)};
}

ScoreVector shrink_t_scores(const GroupStats& stats, const ShrinkageVariance& variances,
                            std::vector<std::string> names) {
  check_names(names, stats.p());
  if (variances.v_shrink.size() != stats.p()) {
    throw InvalidInput("shrinkage variances do not match group statistics");
  }
  const double scale = stats.scale_factor();
  Eigen::VectorXd t(stats.p());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const double v = variances.v_shrink(i);
    const double fc = stats.fold_change(i);
    if (v > 0.0) {
      t(i) = fc / std::sqrt(scale * v);
    } else {
      t(i) = fc == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), fc);
    }
  }
  return {ScoreMethod::kShrinkT, std::move(t), std::move(names)};
}

ScoreVector cat_score_shrinkage(const ScoreVector& t_shrink, const FactoredCorrelation& corr) {
  if (t_shrink.method != ScoreMethod::kShrinkT) {
    throw InvalidInput("shrinkage cat score expects shrink-t input, got " +
                       std::string(to_string(t_shrink.method)));
  }
  if (t_shrink.size() != corr.p()) {
    throw InvalidInput("score length does not match correlation dimension");
  }
  Eigen::VectorXd cat = factored_power_apply(corr, -0.5, finite_part(t_shrink.scores));
  restore_sentinels(t_shrink.scores, cat);
  return {ScoreMethod::kShrinkCat, std::move(cat), t_shrink.feature_names};
}

ScoreVector cat_score_empirical(const ScoreVector& t, const FactoredCorrelation& corr) {
  if (t.size() != corr.p()) throw InvalidInput("score length does not match correlation dimension");
  Eigen::Index inactive = 0;
  for (Eigen::Index i = 0; i < corr.p(); ++i) inactive += corr.is_active(i) ? 0 : 1;
  const auto& d = corr.eigenvalues();
  if (corr.rank() + inactive < corr.p() || (d.size() > 0 && d.minCoeff() <= 1e-10)) {
    throw NumericalError("empirical correlation is singular (rank " + std::to_string(corr.rank()) +
                         " < " + std::to_string(corr.p()) + "); use shrink-cat");
  }
  const Eigen::VectorXd finite = finite_part(t.scores);
  const auto& u = corr.basis();
  Eigen::VectorXd cat = u * (d.array().rsqrt().matrix().cwiseProduct(u.transpose() * finite));
  for (Eigen::Index i = 0; i < corr.p(); ++i) {
    if (!corr.is_active(i)) cat(i) = finite(i);
  }
  restore_sentinels(t.scores, cat);
  return {ScoreMethod::kCat, std::move(cat), t.feature_names};
}

ScoreVector cat_score_oracle(const ScoreVector& t, const OracleCorrelation& oracle) {
  if (t.size() != oracle.p()) {
    throw InvalidInput("score length does not match correlation dimension");
  }
  Eigen::VectorXd cat = oracle.power_apply(-0.5, finite_part(t.scores));
  restore_sentinels(t.scores, cat);
  return {ScoreMethod::kOracleCat, std::move(cat), t.feature_names};
}

}  // namespace catscore
