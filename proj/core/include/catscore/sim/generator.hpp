#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

#include "catscore/dataset.hpp"
#include "catscore/oracle_correlation.hpp"

namespace catscore::sim {

/// Two-group data generator settings. Defaults are desk scale; the
/// command-line simulate defaults are p = 1000, de_count = 100, 500 replicates.
struct GeneratorSpec {
  Eigen::Index p = 200;
  Eigen::Index de_count = 20;  ///< the first de_count features are differential
  double d0 = 4.0;
  double s0_sq = 4.0;
  Eigen::Index n1 = 8;
  Eigen::Index n2 = 8;
  std::uint64_t seed = 1;
  Eigen::Index replicates = 100;

  /// Throws InvalidInput unless de_count <= p, d0 > 2, s0_sq > 0,
  /// n1, n2 >= 2 and replicates >= 1.
  void validate() const;
};

using RngStream = std::mt19937_64;

/// Independent sub-streams of a master seed. A stream is keyed by
/// (seed, replicate, purpose) through std::seed_seq, so the draws of one
/// replicate never depend on which other replicates ran or in what order.
enum class StreamPurpose : std::uint32_t { kData = 0, kRandomOrder = 1 };
RngStream replicate_stream(std::uint64_t seed, std::uint64_t replicate,
                           StreamPurpose purpose = StreamPurpose::kData);

struct TruthLabels {
  std::vector<bool> is_de;
  Eigen::Index de_count = 0;

  Eigen::Index p() const { return static_cast<Eigen::Index>(is_de.size()); }
  /// The first de_count of p features are differential.
  static TruthLabels first(Eigen::Index p, Eigen::Index de_count);
};

/// v_i = d0 * s0_sq / X_i with X_i ~ chi-square(d0), independently per feature.
Eigen::VectorXd sample_variances(const GeneratorSpec& spec, RngStream& rng);

/// Draws standard normal vectors with correlation P through its Cholesky factor.
class MvnSampler {
 public:
  /// Throws NumericalError if P has no Cholesky factorization.
  explicit MvnSampler(const OracleCorrelation& correlation);

  Eigen::Index p() const { return p_; }
  /// p x count matrix whose columns are independent draws.
  Eigen::MatrixXd draw(Eigen::Index count, RngStream& rng) const;

 private:
  Eigen::Index p_;
  bool identity_;
  Eigen::MatrixXd lower_;
};

struct SimulatedDataset {
  LabeledDataset data;
  TruthLabels truth;
  Eigen::VectorXd variances;
  Eigen::VectorXd mean_difference;  ///< mu1 - mu2; zero outside the differential block
};

/// One replicate: variances, then mean differences ~ N(0, v_i) for the
/// differential features, then n1 samples of group 1 (mean = difference)
/// followed by n2 samples of group 2 (mean zero), each mu + V^(1/2) L z.
SimulatedDataset sample_dataset(const GeneratorSpec& spec, const MvnSampler& sampler,
                                RngStream& rng);
SimulatedDataset sample_dataset(const GeneratorSpec& spec, const OracleCorrelation& scenario,
                                RngStream& rng);

}  // namespace catscore::sim
