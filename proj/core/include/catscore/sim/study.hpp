#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "catscore/estimators.hpp"
#include "catscore/gene_sets.hpp"
#include "catscore/oracle_correlation.hpp"
#include "catscore/sim/evaluation.hpp"
#include "catscore/sim/generator.hpp"
#include "catscore/sim/scenario.hpp"

namespace catscore::sim {

enum class StudyMethod {
  kRandom,  ///< uniformly random ordering baseline
  kFold,
  kT,
  kShrinkT,
  kShrinkCat,
  kOracleCat,  ///< Student t decorrelated with the true correlation
  kGroupedShrinkCat,
  kGroupedOracleCat,
};

std::string_view to_string(StudyMethod method);
/// Accepts the names produced by to_string plus "grouped-cat" for
/// grouped-shrink-cat. Throws InvalidInput otherwise.
StudyMethod parse_study_method(std::string_view name);
std::vector<StudyMethod> parse_study_methods(std::string_view comma_separated);

struct StudyOptions {
  std::vector<StudyMethod> methods;
  double group_threshold = kDefaultNeighborhoodThreshold;
  unsigned threads = 1;
  /// Keep every replicate's ranking per method (memory p * replicates).
  bool record_rankings = false;
  CorrelationShrinkageOptions correlation;
};

struct MethodResult {
  StudyMethod method;
  EvalCurves curves;
  std::vector<std::vector<Eigen::Index>> rankings;  ///< per replicate, when recorded
};

struct StudyResult {
  std::vector<MethodResult> methods;  ///< in the requested order

  /// Throws InvalidInput if the method was not part of the study.
  const MethodResult& at(StudyMethod method) const;
};

/// Runs spec.replicates independent replicates. Replicate r draws from
/// replicate_stream(spec.seed, r), so results are bit-identical for any
/// thread count and completion order.
StudyResult run_study(const GeneratorSpec& spec, const OracleCorrelation& scenario,
                      const StudyOptions& options);
StudyResult run_study(const GeneratorSpec& spec, const ScenarioSpec& scenario,
                      const StudyOptions& options);

}  // namespace catscore::sim
