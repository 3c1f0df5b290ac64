#include "catscore/sim/evaluation.hpp"

#include <string>
#include <utility>

#include "catscore/error.hpp"

namespace catscore::sim {

double ConfusionCounts::ppv(Eigen::Index cutoff) const {
  const auto c = static_cast<std::size_t>(cutoff - 1);
  return static_cast<double>(tp[c]) / static_cast<double>(tp[c] + fp[c]);
}

double ConfusionCounts::power(Eigen::Index cutoff) const {
  const auto c = static_cast<std::size_t>(cutoff - 1);
  const int positives = tp[c] + fn[c];
  return positives == 0 ? 0.0 : static_cast<double>(tp[c]) / static_cast<double>(positives);
}

ConfusionCounts evaluate_ranking(const std::vector<Eigen::Index>& ranking,
                                 const TruthLabels& truth) {
  const Eigen::Index p = truth.p();
  if (static_cast<Eigen::Index>(ranking.size()) != p) {
    throw InvalidInput("ranking has " + std::to_string(ranking.size()) + " entries, expected " +
                       std::to_string(p));
  }
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (Eigen::Index f : ranking) {
    if (f < 0 || f >= p || seen[static_cast<std::size_t>(f)]) {
      throw InvalidInput("ranking is not a permutation of the features");
    }
    seen[static_cast<std::size_t>(f)] = true;
  }

  ConfusionCounts counts;
  counts.de_count = truth.de_count;
  const auto size = static_cast<std::size_t>(p);
  counts.tp.resize(size);
  counts.fp.resize(size);
  counts.fn.resize(size);
  counts.tn.resize(size);
  const int positives = static_cast<int>(truth.de_count);
  const int negatives = static_cast<int>(p) - positives;
  int tp = 0;
  int fp = 0;
  for (std::size_t c = 0; c < size; ++c) {
    if (truth.is_de[static_cast<std::size_t>(ranking[c])]) {
      ++tp;
    } else {
      ++fp;
    }
    counts.tp[c] = tp;
    counts.fp[c] = fp;
    counts.fn[c] = positives - tp;
    counts.tn[c] = negatives - fp;
  }
  return counts;
}

EvalCurves aggregate_curves(std::vector<ConfusionCounts> replicates) {
  if (replicates.empty()) throw InvalidInput("no replicates to aggregate");
  const Eigen::Index p = replicates.front().p();
  EvalCurves curves;
  curves.ppv_mean.assign(static_cast<std::size_t>(p), 0.0);
  curves.power_mean.assign(static_cast<std::size_t>(p), 0.0);
  for (const auto& r : replicates) {
    if (r.p() != p) throw InvalidInput("replicates disagree in dimension");
    for (Eigen::Index c = 1; c <= p; ++c) {
      curves.ppv_mean[static_cast<std::size_t>(c - 1)] += r.ppv(c);
      curves.power_mean[static_cast<std::size_t>(c - 1)] += r.power(c);
    }
  }
  const double count = static_cast<double>(replicates.size());
  for (auto& v : curves.ppv_mean) v /= count;
  for (auto& v : curves.power_mean) v /= count;
  curves.replicates = std::move(replicates);
  return curves;
}

}  // namespace catscore::sim
