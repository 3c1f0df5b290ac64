#include "catscore/dataset.hpp"

#include <unordered_map>
#include <utility>

#include "catscore/error.hpp"

namespace catscore {

std::vector<std::string> default_feature_names(Eigen::Index p) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) names.push_back("f" + std::to_string(i + 1));
  return names;
}

LabeledDataset::LabeledDataset(Eigen::MatrixXd values, std::vector<Group> labels)
    : LabeledDataset(std::move(values), std::move(labels), {}) {}

LabeledDataset::LabeledDataset(Eigen::MatrixXd values, std::vector<Group> labels,
                               std::vector<std::string> feature_names)
    : values_(std::move(values)), labels_(std::move(labels)), names_(std::move(feature_names)) {
  if (names_.empty()) names_ = default_feature_names(values_.rows());
  if (values_.rows() == 0) throw InvalidInput("dataset has no features");
  if (static_cast<Eigen::Index>(labels_.size()) != values_.cols()) {
    throw InvalidInput("label count " + std::to_string(labels_.size()) +
                       " does not match sample count " + std::to_string(values_.cols()));
  }
  if (static_cast<Eigen::Index>(names_.size()) != values_.rows()) {
    throw InvalidInput("feature name count does not match feature count");
  }
  for (Group g : labels_) {
    if (g == Group::kFirst) {
      ++n1_;
    } else if (g == Group::kSecond) {
      ++n2_;
    } else {
      throw InvalidInput("group label must be 1 or 2");
    }
  }
  if (n1_ < 2 || n2_ < 2) {
    throw InvalidInput("each group needs at least 2 samples (got n1=" + std::to_string(n1_) +
                       ", n2=" + std::to_string(n2_) + ")");
  }
  if (!values_.allFinite()) throw InvalidInput("dataset contains non-finite values");

  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, inserted] = seen.emplace(names_[i], i);
    if (!inserted) {
      throw InvalidInput("duplicate feature name '" + names_[i] + "' at features " +
                         std::to_string(it->second + 1) + " and " + std::to_string(i + 1));
    }
  }
}

LabeledDataset LabeledDataset::with_swapped_labels() const {
  std::vector<Group> swapped(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    swapped[k] = labels_[k] == Group::kFirst ? Group::kSecond : Group::kFirst;
  }
  return LabeledDataset(values_, std::move(swapped), names_);
}

}  // namespace catscore
