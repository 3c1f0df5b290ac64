#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>

#include "catscore/oracle_correlation.hpp"

namespace catscore::sim {

enum class ScenarioKind {
  kIdentity,              ///< A: no correlation
  kAutoregressiveBlocks,  ///< B: block-diagonal, rho_b^|i-j| within block b
  kTwoBlocks,             ///< C: equicorrelated differential block and null block
  kFile,                  ///< user-supplied matrix
};

/// How the sign of rho alternates across the blocks of scenario B.
enum class BlockSignPattern {
  /// Block b uses rho_b = (-1)^b * rho, so entries are rho_b^|i-j|
  /// (first block positive). Always positive-definite for |rho| < 1.
  kAlternatingRho,
  /// Block b multiplies every off-diagonal entry rho^|i-j| by (-1)^b.
  /// Not positive-definite for strongly correlated blocks; build_scenario
  /// reports that as a NumericalError.
  kAlternatingEntries,
  /// Every block uses +rho.
  kUniform,
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kIdentity;
  Eigen::Index p = 200;

  // Scenario B. block_size == 0 means p / n_blocks.
  Eigen::Index n_blocks = 10;
  Eigen::Index block_size = 0;
  double rho = 0.99;
  BlockSignPattern sign_pattern = BlockSignPattern::kAlternatingRho;

  // Scenario C.
  double rho_de = 0.7;
  double rho_null = 0.3;
  Eigen::Index de_count = 20;

  // kFile.
  std::string path;
};

/// Parses "A", "B", "C" or "file:<path>" into a spec with the given p and
/// differential-block size; other fields keep their defaults.
ScenarioSpec parse_scenario(std::string_view token, Eigen::Index p, Eigen::Index de_count);

std::string scenario_name(const ScenarioSpec& spec);

/// Builds the dense correlation matrix and checks positive-definiteness.
/// Throws InvalidInput for inconsistent parameters, NumericalError when the
/// result is not positive-definite, and DataError for unreadable files.
OracleCorrelation build_scenario(const ScenarioSpec& spec);

}  // namespace catscore::sim
