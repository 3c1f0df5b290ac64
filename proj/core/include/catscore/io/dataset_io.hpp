#pragma once

#include <Eigen/Dense>

#include <filesystem>

#include "catscore/dataset.hpp"

namespace catscore::io {

/// Reads a tab-separated matrix whose first row holds sample identifiers
/// (after a leading corner cell) and whose first column holds feature
/// names, plus a two-column labels file mapping sample identifiers to the
/// literals "1" or "2". Sample order follows the data file.
///
/// Throws DataError naming the file (and row/column where relevant) for
/// empty or ragged files, non-numeric cells, unknown or unlabeled samples,
/// and duplicate feature names; InvalidInput for groups with < 2 samples.
LabeledDataset load_dataset(const std::filesystem::path& data_path,
                            const std::filesystem::path& labels_path);

/// Writes the format read by load_dataset with round-trip precision.
/// Samples are named s1..sn.
void write_dataset(const LabeledDataset& data, const std::filesystem::path& data_path,
                   const std::filesystem::path& labels_path);

/// Tab-separated p x p numeric matrix without header. Validates shape and
/// symmetry within 1e-8, then returns the symmetrized matrix.
Eigen::MatrixXd read_correlation_matrix(const std::filesystem::path& path);

}  // namespace catscore::io
