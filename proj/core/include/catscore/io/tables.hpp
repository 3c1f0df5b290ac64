#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catscore/cat_scores.hpp"
#include "catscore/gene_sets.hpp"
#include "catscore/ranking.hpp"
#include "catscore/sim/study.hpp"

namespace catscore::io {

/// Score values are written with this many significant digits.
inline constexpr int kScoreDigits = 12;

std::string format_number(double value, int significant_digits = kScoreDigits);

/// Splits one line on tabs, dropping a trailing carriage return.
std::vector<std::string_view> split_tabs(std::string_view line);

struct RankedRow {
  Eigen::Index rank;
  std::string feature;
  double score;
  std::string method;
  std::size_t neighborhood_size;
};

struct RankedTable {
  std::vector<RankedRow> rows;
};

inline constexpr std::string_view kRankedHeader = "rank\tfeature\tscore\tmethod\tneighborhood_size";

/// Rows in rank order. Neighborhood sizes default to 1 when no sets are given.
RankedTable make_ranked_table(const ScoreVector& scores,
                              const std::vector<GeneSet>* neighborhoods = nullptr);
void write_ranked_table(std::ostream& out, const RankedTable& table);
/// Parses a ranked table; throws DataError naming the file and line.
RankedTable read_ranked_table(const std::filesystem::path& path);

struct QQRow {
  double probability;
  double theoretical_quantile;
  double empirical_quantile;
};

inline constexpr std::string_view kQQHeader = "probability\ttheoretical_quantile\tempirical_quantile";

/// Sorted scores against standard normal quantiles at (i - 0.5) / p.
/// Throws InvalidInput on an empty or non-finite score list.
std::vector<QQRow> make_qq(std::vector<double> scores);
void write_qq(std::ostream& out, const std::vector<QQRow>& rows);

inline constexpr std::string_view kStudyHeader = "method\tcutoff\tppv_mean\tpower_mean";

/// Long format, one row per method and cutoff.
void write_study_table(std::ostream& out, const sim::StudyResult& result);

inline constexpr std::string_view kNeighborhoodHeader = "feature\tneighborhood_size\tmembers";
void write_neighborhood_table(std::ostream& out, const std::vector<std::string>& names,
                              const std::vector<GeneSet>& sets);

}  // namespace catscore::io
