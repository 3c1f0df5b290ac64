#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "catscore/cat_scores.hpp"
#include "catscore/error.hpp"
#include "catscore/estimators.hpp"
#include "catscore/gene_sets.hpp"
#include "catscore/io/dataset_io.hpp"
#include "catscore/io/tables.hpp"
#include "catscore/sim/generator.hpp"
#include "catscore/sim/scenario.hpp"
#include "catscore/sim/study.hpp"

namespace catscore::cli {

namespace {

// Writes through `fn` to --out, or to stdout when the path is "-".
void emit(const std::string& path, std::ostream& stdout_stream,
          const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(stdout_stream);
    return;
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot write " + path);
  fn(file);
  if (!file) throw DataError("failed writing " + path);
}

struct ScoreFlags {
  std::string data;
  std::string labels;
  std::string method = "shrink-cat";
  double group_threshold = kDefaultNeighborhoodThreshold;
  double gamma_floor = 1e-4;
  std::string out = "-";
};

struct ScoredDataset {
  ScoreVector scores;
  std::optional<std::vector<GeneSet>> neighborhoods;
};

ScoredDataset score_dataset(const LabeledDataset& data, ScoreMethod method, double threshold,
                            double gamma_floor) {
  const GroupStats stats = compute_group_stats(data);
  const auto& names = data.feature_names();
  CorrelationShrinkageOptions corr_options;
  corr_options.gamma_floor = gamma_floor;
  switch (method) {
    case ScoreMethod::kFold:
      return {fold_change_scores(stats, names), std::nullopt};
    case ScoreMethod::kT:
      return {t_scores(stats, names), std::nullopt};
    case ScoreMethod::kShrinkT:
      return {shrink_t_scores(stats, shrink_variances(stats, data), names), std::nullopt};
    case ScoreMethod::kCat:
      return {cat_score_empirical(t_scores(stats, names), shrink_correlation(data, stats)),
              std::nullopt};
    case ScoreMethod::kShrinkCat:
    case ScoreMethod::kGroupedCat: {
      const ScoreVector shrink_t = shrink_t_scores(stats, shrink_variances(stats, data), names);
      const FactoredCorrelation corr = shrink_correlation(data, stats, corr_options);
      ScoreVector cat = cat_score_shrinkage(shrink_t, corr);
      if (method == ScoreMethod::kShrinkCat) return {std::move(cat), std::nullopt};
      auto sets = correlation_neighborhoods(corr, threshold);
      ScoreVector grouped = grouped_cat_score(cat, sets);
      return {std::move(grouped), std::move(sets)};
    }
    case ScoreMethod::kOracleCat:
      break;
  }
  throw InvalidInput("method " + std::string(to_string(method)) +
                     " needs a known correlation matrix and is only available in simulate");
}

void run_score(const ScoreFlags& f, std::ostream& out) {
  const LabeledDataset data = io::load_dataset(f.data, f.labels);
  const ScoredDataset scored =
      score_dataset(data, parse_score_method(f.method), f.group_threshold, f.gamma_floor);
  const io::RankedTable table =
      io::make_ranked_table(scored.scores, scored.neighborhoods ? &*scored.neighborhoods : nullptr);
  emit(f.out, out, [&](std::ostream& os) { io::write_ranked_table(os, table); });
}

void run_neighborhoods(const ScoreFlags& f, std::ostream& out) {
  const LabeledDataset data = io::load_dataset(f.data, f.labels);
  CorrelationShrinkageOptions corr_options;
  corr_options.gamma_floor = f.gamma_floor;
  const auto sets =
      correlation_neighborhoods(shrink_correlation(data, corr_options), f.group_threshold);
  emit(f.out, out,
       [&](std::ostream& os) { io::write_neighborhood_table(os, data.feature_names(), sets); });
}

struct SimulateFlags {
  std::string scenario = "A";
  sim::GeneratorSpec gen{1000, 100, 4.0, 4.0, 8, 8, 0, 500};
  std::string methods = "fold,t,shrink-t,shrink-cat,oracle-cat,random";
  double group_threshold = kDefaultNeighborhoodThreshold;
  double gamma_floor = 1e-4;
  Eigen::Index blocks = 10;
  Eigen::Index block_size = 0;
  double rho = 0.99;
  std::string sign_pattern = "alternating-rho";
  double rho_de = 0.7;
  double rho_null = 0.3;
  unsigned threads = 1;
  std::string emit_dataset;
  std::string out = "-";
};

sim::BlockSignPattern parse_sign_pattern(const std::string& s) {
  if (s == "alternating-rho") return sim::BlockSignPattern::kAlternatingRho;
  if (s == "alternating-entries") return sim::BlockSignPattern::kAlternatingEntries;
  if (s == "uniform") return sim::BlockSignPattern::kUniform;
  throw InvalidInput("unknown sign pattern '" + s + "'");
}

void run_simulate(const SimulateFlags& f, std::ostream& out) {
  f.gen.validate();
  sim::ScenarioSpec scenario = sim::parse_scenario(f.scenario, f.gen.p, f.gen.de_count);
  scenario.n_blocks = f.blocks;
  scenario.block_size = f.block_size;
  scenario.rho = f.rho;
  scenario.sign_pattern = parse_sign_pattern(f.sign_pattern);
  scenario.rho_de = f.rho_de;
  scenario.rho_null = f.rho_null;
  const OracleCorrelation truth = sim::build_scenario(scenario);

  sim::StudyOptions options;
  options.methods = sim::parse_study_methods(f.methods);
  options.group_threshold = f.group_threshold;
  options.threads = f.threads;
  options.correlation.gamma_floor = f.gamma_floor;

  if (!f.emit_dataset.empty()) {
    sim::RngStream rng = sim::replicate_stream(f.gen.seed, 0);
    const auto first = sim::sample_dataset(f.gen, truth, rng);
    io::write_dataset(first.data, f.emit_dataset + ".data.tsv", f.emit_dataset + ".labels.tsv");
  }
  const sim::StudyResult result = sim::run_study(f.gen, truth, options);
  emit(f.out, out, [&](std::ostream& os) { io::write_study_table(os, result); });
}

struct QQFlags {
  std::string scores;
  std::string out = "-";
};

void run_qq(const QQFlags& f, std::ostream& out) {
  const io::RankedTable table = io::read_ranked_table(f.scores);
  std::vector<double> scores;
  scores.reserve(table.rows.size());
  for (const auto& row : table.rows) scores.push_back(row.score);
  const auto rows = io::make_qq(std::move(scores));
  emit(f.out, out, [&](std::ostream& os) { io::write_qq(os, rows); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation-adjusted t-score ranking and simulation toolkit", "catscore"};
  app.require_subcommand(1);

  ScoreFlags score;
  auto* score_cmd = app.add_subcommand("score", "Rank the features of a two-group dataset");
  score_cmd->add_option("--data", score.data, "Tab-separated feature x sample matrix")->required();
  score_cmd->add_option("--labels", score.labels, "Two-column sample -> group (1|2) file")->required();
  score_cmd->add_option("--method", score.method, "fold | t | shrink-t | cat | shrink-cat | grouped-cat")
      ->capture_default_str();
  score_cmd->add_option("--group-threshold", score.group_threshold,
                        "Correlation neighborhood threshold |r| for grouped-cat")
      ->capture_default_str();
  score_cmd->add_option("--gamma-floor", score.gamma_floor, "Lower bound on the correlation shrinkage intensity")
      ->capture_default_str();
  score_cmd->add_option("--out", score.out, "Output path, - for stdout")->capture_default_str();

  ScoreFlags hood;
  auto* hood_cmd = app.add_subcommand("neighborhoods", "Dump per-feature correlation neighborhoods");
  hood_cmd->add_option("--data", hood.data)->required();
  hood_cmd->add_option("--labels", hood.labels)->required();
  hood_cmd->add_option("--group-threshold", hood.group_threshold)->capture_default_str();
  hood_cmd->add_option("--gamma-floor", hood.gamma_floor)->capture_default_str();
  hood_cmd->add_option("--out", hood.out)->capture_default_str();

  SimulateFlags simf;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate a ranking study and emit ppv/power curves");
  sim_cmd->add_option("--scenario", simf.scenario, "A | B | C | file:<path>")->capture_default_str();
  sim_cmd->add_option("--p", simf.gen.p, "Number of features")->capture_default_str();
  sim_cmd->add_option("--de", simf.gen.de_count, "Number of differential features")->capture_default_str();
  sim_cmd->add_option("--n1", simf.gen.n1)->capture_default_str();
  sim_cmd->add_option("--n2", simf.gen.n2)->capture_default_str();
  sim_cmd->add_option("--d0", simf.gen.d0, "Variance prior degrees of freedom")->capture_default_str();
  sim_cmd->add_option("--s0sq", simf.gen.s0_sq, "Variance prior scale")->capture_default_str();
  sim_cmd->add_option("--replicates", simf.gen.replicates)->capture_default_str();
  sim_cmd->add_option("--seed", simf.gen.seed, "Master seed")->required();
  sim_cmd->add_option("--methods", simf.methods,
                      "Comma list of random, fold, t, shrink-t, shrink-cat, oracle-cat, "
                      "grouped-shrink-cat (grouped-cat), grouped-oracle-cat")
      ->capture_default_str();
  sim_cmd->add_option("--group-threshold", simf.group_threshold)->capture_default_str();
  sim_cmd->add_option("--gamma-floor", simf.gamma_floor)->capture_default_str();
  sim_cmd->add_option("--blocks", simf.blocks, "Scenario B block count")->capture_default_str();
  sim_cmd->add_option("--block-size", simf.block_size, "Scenario B block size (0: p / blocks)")
      ->capture_default_str();
  sim_cmd->add_option("--rho", simf.rho, "Scenario B autoregressive correlation")->capture_default_str();
  sim_cmd->add_option("--sign-pattern", simf.sign_pattern,
                      "Scenario B: alternating-rho | alternating-entries | uniform")
      ->capture_default_str();
  sim_cmd->add_option("--rho-de", simf.rho_de, "Scenario C correlation in the differential block")
      ->capture_default_str();
  sim_cmd->add_option("--rho-null", simf.rho_null, "Scenario C correlation in the null block")
      ->capture_default_str();
  sim_cmd->add_option("--threads", simf.threads, "Worker threads for replicates")->capture_default_str();
  sim_cmd->add_option("--emit-dataset", simf.emit_dataset,
                      "Also write replicate 0 as <prefix>.data.tsv and <prefix>.labels.tsv");
  sim_cmd->add_option("--out", simf.out)->capture_default_str();

  QQFlags qq;
  auto* qq_cmd = app.add_subcommand("qq", "Normal Q-Q data for a scores table");
  qq_cmd->add_option("--scores", qq.scores, "Ranked table written by score")->required();
  qq_cmd->add_option("--out", qq.out)->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*score_cmd) run_score(score, out);
    if (*hood_cmd) run_neighborhoods(hood, out);
    if (*sim_cmd) run_simulate(simf, out);
    if (*qq_cmd) run_qq(qq, out);
  } catch (const NumericalError& e) {
    err << "catscore: numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const Error& e) {
    err << "catscore: " << e.what() << '\n';
    return kDataError;
  }
  return kSuccess;
}

}  // namespace catscore::cli
