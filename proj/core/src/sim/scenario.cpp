#include "catscore/sim/scenario.hpp"

#include <cmath>
#include <string>

#include "catscore/error.hpp"
#include "catscore/io/dataset_io.hpp"

namespace catscore::sim {

namespace {

Eigen::MatrixXd autoregressive_blocks(const ScenarioSpec& spec) {
  const Eigen::Index size = spec.block_size > 0 ? spec.block_size
                                                : (spec.n_blocks > 0 ? spec.p / spec.n_blocks : 0);
  if (spec.n_blocks <= 0 || size <= 0 || size * spec.n_blocks != spec.p) {
    throw InvalidInput("scenario B needs p = n_blocks * block_size (p=" + std::to_string(spec.p) +
                       ", n_blocks=" + std::to_string(spec.n_blocks) + ")");
  }
  if (!(std::abs(spec.rho) < 1.0)) throw InvalidInput("scenario B needs |rho| < 1");

  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spec.p, spec.p);
  for (Eigen::Index b = 0; b < spec.n_blocks; ++b) {
    const double sign = b % 2 == 0 ? 1.0 : -1.0;
    const Eigen::Index start = b * size;
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = 0; j < size; ++j) {
        if (i == j) continue;
        const int lag = static_cast<int>(std::abs(i - j));
        double value = 0.0;
        switch (spec.sign_pattern) {
          case BlockSignPattern::kAlternatingRho:
            value = std::pow(sign * spec.rho, lag);
            break;
          case BlockSignPattern::kAlternatingEntries:
            value = sign * std::pow(spec.rho, lag);
            break;
          case BlockSignPattern::kUniform:
            value = std::pow(spec.rho, lag);
            break;
        }
        m(start + i, start + j) = value;
      }
    }
  }
  return m;
}

Eigen::MatrixXd two_blocks(const ScenarioSpec& spec) {
  if (spec.de_count < 0 || spec.de_count > spec.p) {
    throw InvalidInput("scenario C differential block exceeds p");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(spec.p, spec.p);
  const Eigen::Index de = spec.de_count;
  m.topLeftCorner(de, de).setConstant(spec.rho_de);
  m.bottomRightCorner(spec.p - de, spec.p - de).setConstant(spec.rho_null);
  m.diagonal().setOnes();
  return m;
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view token, Eigen::Index p, Eigen::Index de_count) {
  ScenarioSpec spec;
  spec.p = p;
  spec.de_count = de_count;
  if (token == "A") {
    spec.kind = ScenarioKind::kIdentity;
  } else if (token == "B") {
    spec.kind = ScenarioKind::kAutoregressiveBlocks;
  } else if (token == "C") {
    spec.kind = ScenarioKind::kTwoBlocks;
  } else if (token.starts_with("file:") && token.size() > 5) {
    spec.kind = ScenarioKind::kFile;
    spec.path = std::string(token.substr(5));
  } else {
    throw InvalidInput("unknown scenario '" + std::string(token) +
                       "' (expected A, B, C or file:<path>)");
  }
  return spec;
}

std::string scenario_name(const ScenarioSpec& spec) {
  switch (spec.kind) {
    case ScenarioKind::kIdentity:
      return "A";
    case ScenarioKind::kAutoregressiveBlocks:
      return "B";
    case ScenarioKind::kTwoBlocks:
      return "C";
    case ScenarioKind::kFile:
      return "file:" + spec.path;
  }
  return "unknown";
}

OracleCorrelation build_scenario(const ScenarioSpec& spec) {
  if (spec.kind != ScenarioKind::kFile && spec.p <= 0) {
    throw InvalidInput("scenario dimension must be positive");
  }
  Eigen::MatrixXd m;
  switch (spec.kind) {
    case ScenarioKind::kIdentity:
      m = Eigen::MatrixXd::Identity(spec.p, spec.p);
      break;
    case ScenarioKind::kAutoregressiveBlocks:
      m = autoregressive_blocks(spec);
      break;
    case ScenarioKind::kTwoBlocks:
      m = two_blocks(spec);
      break;
    case ScenarioKind::kFile:
      m = io::read_correlation_matrix(spec.path);
      if (spec.p > 0 && m.rows() != spec.p) {
        throw DataError("correlation file " + spec.path + " has dimension " +
                        std::to_string(m.rows()) + ", expected " + std::to_string(spec.p));
      }
      break;
  }
  return OracleCorrelation(std::move(m));
}

}  // namespace catscore::sim
