#include "catscore/sim/generator.hpp"

#include <cmath>
#include <string>

#include "catscore/error.hpp"

namespace catscore::sim {

void GeneratorSpec::validate() const {
  if (p < 1) throw InvalidInput("p must be positive");
  if (de_count < 0 || de_count > p) throw InvalidInput("de_count must lie in [0, p]");
  if (!(d0 > 2.0)) throw InvalidInput("d0 must exceed 2");
  if (!(s0_sq > 0.0)) throw InvalidInput("s0_sq must be positive");
  if (n1 < 2 || n2 < 2) throw InvalidInput("each group needs at least 2 samples");
  if (replicates < 1) throw InvalidInput("replicates must be at least 1");
}

RngStream replicate_stream(std::uint64_t seed, std::uint64_t replicate, StreamPurpose purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replicate),
                    static_cast<std::uint32_t>(replicate >> 32),
                    static_cast<std::uint32_t>(purpose)};
  return RngStream(seq);
}

TruthLabels TruthLabels::first(Eigen::Index p, Eigen::Index de_count) {
  if (de_count < 0 || de_count > p) throw InvalidInput("de_count must lie in [0, p]");
  TruthLabels truth;
  truth.is_de.assign(static_cast<std::size_t>(p), false);
  for (Eigen::Index i = 0; i < de_count; ++i) truth.is_de[static_cast<std::size_t>(i)] = true;
  truth.de_count = de_count;
  return truth;
}

Eigen::VectorXd sample_variances(const GeneratorSpec& spec, RngStream& rng) {
  if (!(spec.d0 > 0.0) || !(spec.s0_sq > 0.0)) {
    throw InvalidInput("scale-inverse-chi-square needs d0 > 0 and s0_sq > 0");
  }
  std::chi_squared_distribution<double> chi2(spec.d0);
  Eigen::VectorXd v(spec.p);
  for (Eigen::Index i = 0; i < spec.p; ++i) v(i) = spec.d0 * spec.s0_sq / chi2(rng);
  return v;
}

MvnSampler::MvnSampler(const OracleCorrelation& correlation)
    : p_(correlation.p()),
      identity_(correlation.matrix().isIdentity(0.0)) {
  if (identity_) return;
  Eigen::LLT<Eigen::MatrixXd> llt(correlation.matrix());
  if (llt.info() != Eigen::Success) {
    throw NumericalError("scenario correlation has no Cholesky factor");
  }
  lower_ = llt.matrixL();
}

Eigen::MatrixXd MvnSampler::draw(Eigen::Index count, RngStream& rng) const {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd z(p_, count);
  for (Eigen::Index c = 0; c < count; ++c) {
    for (Eigen::Index i = 0; i < p_; ++i) z(i, c) = normal(rng);
  }
  if (identity_) return z;
  return lower_.triangularView<Eigen::Lower>() * z;
}

SimulatedDataset sample_dataset(const GeneratorSpec& spec, const OracleCorrelation& scenario,
                                RngStream& rng) {
  return sample_dataset(spec, MvnSampler(scenario), rng);
}

SimulatedDataset sample_dataset(const GeneratorSpec& spec, const MvnSampler& sampler,
                                RngStream& rng) {
  spec.validate();
  if (sampler.p() != spec.p) {
    throw InvalidInput("scenario dimension " + std::to_string(sampler.p()) +
                       " does not match generator p " + std::to_string(spec.p));
  }
  Eigen::VectorXd variances = sample_variances(spec, rng);
  const Eigen::VectorXd sd = variances.cwiseSqrt();

  Eigen::VectorXd diff = Eigen::VectorXd::Zero(spec.p);
  std::normal_distribution<double> normal;
  for (Eigen::Index i = 0; i < spec.de_count; ++i) diff(i) = sd(i) * normal(rng);

  const Eigen::Index n = spec.n1 + spec.n2;
  Eigen::MatrixXd x(spec.p, n);
  x.leftCols(spec.n1) = sampler.draw(spec.n1, rng);
  x.rightCols(spec.n2) = sampler.draw(spec.n2, rng);
  x = sd.asDiagonal() * x;
  x.leftCols(spec.n1).colwise() += diff;

  std::vector<Group> labels(static_cast<std::size_t>(n), Group::kSecond);
  for (Eigen::Index k = 0; k < spec.n1; ++k) labels[static_cast<std::size_t>(k)] = Group::kFirst;

  return SimulatedDataset{LabeledDataset(std::move(x), std::move(labels)),
                          TruthLabels::first(spec.p, spec.de_count), std::move(variances),
                          std::move(diff)};
}

}  // namespace catscore::sim
