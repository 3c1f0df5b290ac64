#include "catscore/lda.hpp"

#include <cmath>

#include "catscore/error.hpp"
#include "catscore/factored_power.hpp"

namespace catscore {

namespace {

void validate(const LDAModel& model) {
  const Eigen::Index p = model.p();
  const Eigen::Index corr_p =
      std::visit([](const auto& c) { return c.p(); }, model.correlation);
  if (model.mu2.size() != p || model.variances.size() != p || corr_p != p) {
    throw InvalidInput("LDA model dimensions disagree");
  }
  if (!(model.variances.array() > 0.0).all()) {
    throw InvalidInput("LDA model variances must be positive");
  }
}

Eigen::VectorXd decorrelate(const CorrelationModel& corr, const Eigen::VectorXd& v) {
  struct Visitor {
    const Eigen::VectorXd& v;
    Eigen::VectorXd operator()(const FactoredCorrelation& c) const {
      return factored_power_apply(c, -0.5, v);
    }
    Eigen::VectorXd operator()(const OracleCorrelation& c) const { return c.power_apply(-0.5, v); }
  };
  return std::visit(Visitor{v}, corr);
}

}  // namespace

Eigen::VectorXd lda_feature_weights(const LDAModel& model) {
  validate(model);
  const Eigen::VectorXd standardized =
      (model.mu1 - model.mu2).cwiseQuotient(model.variances.cwiseSqrt());
  return decorrelate(model.correlation, standardized);
}

Eigen::VectorXd lda_distance(const LDAModel& model, const Eigen::Ref<const Eigen::VectorXd>& x) {
  validate(model);
  if (x.size() != model.p()) throw InvalidInput("sample length does not match model dimension");
  const Eigen::VectorXd centered = x - 0.5 * (model.mu1 + model.mu2);
  return decorrelate(model.correlation, centered.cwiseQuotient(model.variances.cwiseSqrt()));
}

LdaPrediction lda_predict(const LDAModel& model, const Eigen::Ref<const Eigen::VectorXd>& x) {
  const double delta = lda_feature_weights(model).dot(lda_distance(model, x)) + model.log_prior_ratio;
  return {delta, delta >= 0.0 ? Group::kFirst : Group::kSecond};
}

LDAModel fit_lda(const LabeledDataset& data, const CorrelationShrinkageOptions& options) {
  const GroupStats stats = compute_group_stats(data);
  const ShrinkageVariance var = shrink_variances(stats, data);
  if (!(var.v_shrink.array() > 0.0).all()) {
    throw NumericalError("shrinkage variances are not all positive; cannot fit LDA");
  }
  const double n = static_cast<double>(data.n());
  return LDAModel{stats.mu1, stats.mu2, var.v_shrink, shrink_correlation(data, stats, options),
                  std::log((static_cast<double>(data.n1()) / n) /
                           (static_cast<double>(data.n2()) / n))};
}

}  // namespace catscore
