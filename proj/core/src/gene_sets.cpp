#include "catscore/gene_sets.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "catscore/error.hpp"

namespace catscore {

namespace {

void check_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidInput("neighborhood threshold must lie in (0, 1], got " + std::to_string(threshold));
  }
}

template <typename RowFn>
std::vector<GeneSet> neighborhoods_from_rows(Eigen::Index p, double threshold, RowFn&& row_of) {
  check_threshold(threshold);
  std::vector<GeneSet> sets;
  sets.reserve(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) {
    const Eigen::VectorXd r = row_of(i);
    std::vector<Eigen::Index> members{i};
    for (Eigen::Index j = 0; j < p; ++j) {
      if (j != i && std::abs(r(j)) >= threshold) members.push_back(j);
    }
    sets.emplace_back(std::move(members), GeneSetOrigin::kNeighborhood);
  }
  return sets;
}

}  // namespace

GeneSet::GeneSet(std::vector<Eigen::Index> members, GeneSetOrigin origin)
    : members_(std::move(members)), origin_(origin) {
  if (members_.empty()) throw InvalidInput("gene set must not be empty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidInput("gene set contains a repeated feature index");
  }
  if (members_.front() < 0) throw InvalidInput("gene set contains a negative feature index");
}

bool GeneSet::contains(Eigen::Index i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

double hotelling_t2(const ScoreVector& cat, const GeneSet& set) {
  if (!is_cat_variant(cat.method)) {
    throw InvalidInput("Hotelling T^2 needs cat scores, got " + std::string(to_string(cat.method)));
  }
  double sum = 0.0;
  for (Eigen::Index g : set.members()) {
    if (g >= cat.size()) throw InvalidInput("gene set index out of range");
    sum += cat.scores(g) * cat.scores(g);
  }
  return sum;
}

ScoreVector grouped_cat_score(const ScoreVector& cat, const std::vector<GeneSet>& sets) {
  const Eigen::Index p = cat.size();
  if (static_cast<Eigen::Index>(sets.size()) != p) {
    throw InvalidInput("need exactly one gene set per feature");
  }
  Eigen::VectorXd grouped(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const GeneSet& set = sets[static_cast<std::size_t>(i)];
    if (!set.contains(i)) {
      throw InvalidInput("gene set for feature " + std::to_string(i + 1) +
                         " does not contain the feature itself");
    }
    double sum = 0.0;
    for (Eigen::Index g : set.members()) {
      if (g >= p) throw InvalidInput("gene set index out of range");
      sum += cat.scores(g) * cat.scores(g);
    }
    grouped(i) = std::copysign(std::sqrt(sum), cat.scores(i) < 0.0 ? -1.0 : 1.0);
  }
  return {ScoreMethod::kGroupedCat, std::move(grouped), cat.feature_names};
}

std::vector<GeneSet> correlation_neighborhoods(const FactoredCorrelation& corr, double threshold) {
  return neighborhoods_from_rows(corr.p(), threshold, [&](Eigen::Index i) { return corr.row(i); });
}

std::vector<GeneSet> correlation_neighborhoods(const OracleCorrelation& corr, double threshold) {
  return neighborhoods_from_rows(corr.p(), threshold, [&](Eigen::Index i) {
    return Eigen::VectorXd(corr.matrix().row(i).transpose());
  });
}

}  // namespace catscore
