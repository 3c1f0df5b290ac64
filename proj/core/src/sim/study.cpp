#include "catscore/sim/study.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "catscore/cat_scores.hpp"
#include "catscore/error.hpp"
#include "catscore/ranking.hpp"

namespace catscore::sim {

namespace {

constexpr std::array<std::pair<StudyMethod, std::string_view>, 8> kStudyNames{{
    {StudyMethod::kRandom, "random"},
    {StudyMethod::kFold, "fold"},
    {StudyMethod::kT, "t"},
    {StudyMethod::kShrinkT, "shrink-t"},
    {StudyMethod::kShrinkCat, "shrink-cat"},
    {StudyMethod::kOracleCat, "oracle-cat"},
    {StudyMethod::kGroupedShrinkCat, "grouped-shrink-cat"},
    {StudyMethod::kGroupedOracleCat, "grouped-oracle-cat"},
}};

bool wants(const std::vector<StudyMethod>& methods, std::initializer_list<StudyMethod> any) {
  return std::any_of(methods.begin(), methods.end(), [&](StudyMethod m) {
    return std::find(any.begin(), any.end(), m) != any.end();
  });
}

// Read-only state shared by every replicate.
struct SharedInputs {
  const GeneratorSpec& spec;
  const StudyOptions& options;
  MvnSampler sampler;
  const OracleCorrelation& scenario;
  std::optional<std::vector<GeneSet>> oracle_sets;
};

// Rankings of one replicate, one per requested method.
std::vector<std::vector<Eigen::Index>> run_replicate(const SharedInputs& in, Eigen::Index r) {
  const auto& methods = in.options.methods;
  RngStream rng = replicate_stream(in.spec.seed, static_cast<std::uint64_t>(r));
  const SimulatedDataset sim = sample_dataset(in.spec, in.sampler, rng);
  const GroupStats stats = compute_group_stats(sim.data);

  std::optional<ScoreVector> shrink_t;
  if (wants(methods, {StudyMethod::kShrinkT, StudyMethod::kShrinkCat,
                      StudyMethod::kGroupedShrinkCat})) {
    shrink_t = shrink_t_scores(stats, shrink_variances(stats, sim.data), {});
  }
  std::optional<ScoreVector> shrink_cat;
  std::optional<FactoredCorrelation> corr;
  if (wants(methods, {StudyMethod::kShrinkCat, StudyMethod::kGroupedShrinkCat})) {
    corr = shrink_correlation(sim.data, stats, in.options.correlation);
    shrink_cat = cat_score_shrinkage(*shrink_t, *corr);
  }
  std::optional<ScoreVector> oracle_cat;
  if (wants(methods, {StudyMethod::kOracleCat, StudyMethod::kGroupedOracleCat})) {
    oracle_cat = cat_score_oracle(t_scores(stats, {}), in.scenario);
  }

  std::vector<std::vector<Eigen::Index>> rankings;
  rankings.reserve(methods.size());
  for (StudyMethod m : methods) {
    switch (m) {
      case StudyMethod::kRandom: {
        std::vector<Eigen::Index> order(static_cast<std::size_t>(in.spec.p));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        RngStream shuffle_rng =
            replicate_stream(in.spec.seed, static_cast<std::uint64_t>(r), StreamPurpose::kRandomOrder);
        std::shuffle(order.begin(), order.end(), shuffle_rng);
        rankings.push_back(std::move(order));
        break;
      }
      case StudyMethod::kFold:
        rankings.push_back(ranking_order(stats.fold_change));
        break;
      case StudyMethod::kT:
        rankings.push_back(ranking_order(stats.t));
        break;
      case StudyMethod::kShrinkT:
        rankings.push_back(ranking_order(shrink_t->scores));
        break;
      case StudyMethod::kShrinkCat:
        rankings.push_back(ranking_order(shrink_cat->scores));
        break;
      case StudyMethod::kOracleCat:
        rankings.push_back(ranking_order(oracle_cat->scores));
        break;
      case StudyMethod::kGroupedShrinkCat: {
        const auto sets = correlation_neighborhoods(*corr, in.options.group_threshold);
        rankings.push_back(ranking_order(grouped_cat_score(*shrink_cat, sets).scores));
        break;
      }
      case StudyMethod::kGroupedOracleCat:
        rankings.push_back(ranking_order(grouped_cat_score(*oracle_cat, *in.oracle_sets).scores));
        break;
    }
  }
  return rankings;
}

}  // namespace

std::string_view to_string(StudyMethod method) {
  for (const auto& [m, name] : kStudyNames) {
    if (m == method) return name;
  }
  return "unknown";
}

StudyMethod parse_study_method(std::string_view name) {
  if (name == "grouped-cat") return StudyMethod::kGroupedShrinkCat;
  for (const auto& [m, n] : kStudyNames) {
    if (n == name) return m;
  }
  throw InvalidInput("unknown study method '" + std::string(name) + "'");
}

std::vector<StudyMethod> parse_study_methods(std::string_view comma_separated) {
  std::vector<StudyMethod> methods;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    const std::size_t end = std::min(comma_separated.find(',', start), comma_separated.size());
    const std::string_view token = comma_separated.substr(start, end - start);
    if (!token.empty()) methods.push_back(parse_study_method(token));
    start = end + 1;
  }
  if (methods.empty()) throw InvalidInput("no study methods given");
  return methods;
}

const MethodResult& StudyResult::at(StudyMethod method) const {
  for (const auto& m : methods) {
    if (m.method == method) return m;
  }
  throw InvalidInput("method " + std::string(to_string(method)) + " was not part of the study");
}

StudyResult run_study(const GeneratorSpec& spec, const ScenarioSpec& scenario,
                      const StudyOptions& options) {
  return run_study(spec, build_scenario(scenario), options);
}

StudyResult run_study(const GeneratorSpec& spec, const OracleCorrelation& scenario,
                      const StudyOptions& options) {
  spec.validate();
  if (options.methods.empty()) throw InvalidInput("study needs at least one method");
  if (scenario.p() != spec.p) {
    throw InvalidInput("scenario dimension " + std::to_string(scenario.p()) +
                       " does not match generator p " + std::to_string(spec.p));
  }

  SharedInputs shared{spec, options, MvnSampler(scenario), scenario, std::nullopt};
  if (wants(options.methods, {StudyMethod::kGroupedOracleCat})) {
    shared.oracle_sets = correlation_neighborhoods(scenario, options.group_threshold);
  }

  const auto replicates = static_cast<std::size_t>(spec.replicates);
  std::vector<std::vector<std::vector<Eigen::Index>>> per_replicate(replicates);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < replicates; r = next++) {
      try {
        per_replicate[r] = run_replicate(shared, static_cast<Eigen::Index>(r));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = replicates;
      }
    }
  };
  const unsigned threads =
      std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(replicates));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  StudyResult result;
  const TruthLabels truth = TruthLabels::first(spec.p, spec.de_count);
  for (std::size_t mi = 0; mi < options.methods.size(); ++mi) {
    std::vector<ConfusionCounts> counts;
    counts.reserve(replicates);
    MethodResult method_result{options.methods[mi], {}, {}};
    for (std::size_t r = 0; r < replicates; ++r) {
      counts.push_back(evaluate_ranking(per_replicate[r][mi], truth));
      if (options.record_rankings) method_result.rankings.push_back(per_replicate[r][mi]);
    }
    method_result.curves = aggregate_curves(std::move(counts));
    result.methods.push_back(std::move(method_result));
  }
  return result;
}

}  // namespace catscore::sim
