#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace catscore {

enum class Group : std::uint8_t { kFirst = 1, kSecond = 2 };

/// Two-group study: p features (rows) by n samples (columns).
///
/// Construction validates the invariants: at least two samples per group,
/// one label per column, unique feature names, finite values.
class LabeledDataset {
 public:
  LabeledDataset(Eigen::MatrixXd values, std::vector<Group> labels,
                 std::vector<std::string> feature_names);

  /// Names default to "f1".."fp".
  LabeledDataset(Eigen::MatrixXd values, std::vector<Group> labels);

  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<Group>& labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const { return names_; }

  Eigen::Index p() const { return values_.rows(); }
  Eigen::Index n() const { return values_.cols(); }
  Eigen::Index n1() const { return n1_; }
  Eigen::Index n2() const { return n2_; }

  /// Same data with groups 1 and 2 exchanged.
  LabeledDataset with_swapped_labels() const;

 private:
  Eigen::MatrixXd values_;
  std::vector<Group> labels_;
  std::vector<std::string> names_;
  Eigen::Index n1_ = 0;
  Eigen::Index n2_ = 0;
};

std::vector<std::string> default_feature_names(Eigen::Index p);

}  // namespace catscore
