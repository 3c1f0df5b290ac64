#include "catscore/io/tables.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "catscore/error.hpp"

namespace catscore::io {

std::string format_number(double value, int significant_digits) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

RankedTable make_ranked_table(const ScoreVector& scores, const std::vector<GeneSet>* neighborhoods) {
  if (neighborhoods && static_cast<Eigen::Index>(neighborhoods->size()) != scores.size()) {
    throw InvalidInput("need one neighborhood per feature");
  }
  const auto names = scores.feature_names.empty() ? default_feature_names(scores.size())
                                                  : scores.feature_names;
  RankedTable table;
  for (const RankedFeature& f : rank_features(scores)) {
    const auto i = static_cast<std::size_t>(f.feature);
    table.rows.push_back({f.rank, names[i], f.score, std::string(to_string(scores.method)),
                          neighborhoods ? (*neighborhoods)[i].size() : std::size_t{1}});
  }
  return table;
}

void write_ranked_table(std::ostream& out, const RankedTable& table) {
  out << kRankedHeader << '\n';
  for (const auto& row : table.rows) {
    out << row.rank << '\t' << row.feature << '\t' << format_number(row.score) << '\t' << row.method
        << '\t' << row.neighborhood_size << '\n';
  }
}

RankedTable read_ranked_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRankedHeader) {
    throw DataError(path.string() + ": expected header '" + std::string(kRankedHeader) + "'");
  }
  RankedTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_tabs(line);
    auto fail = [&](const std::string& what) {
      return DataError(path.string() + ": line " + std::to_string(line_no) + ": " + what);
    };
    if (fields.size() != 5) throw fail("expected 5 fields");
    RankedRow row{};
    auto parse_int = [&](std::string_view s, auto& dest) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), dest);
      if (ec != std::errc() || ptr != s.data() + s.size()) throw fail("bad integer '" + std::string(s) + "'");
    };
    parse_int(fields[0], row.rank);
    row.feature = std::string(fields[1]);
    const auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), row.score);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() || std::isnan(row.score)) {
      throw fail("bad score '" + std::string(fields[2]) + "'");
    }
    row.method = std::string(fields[3]);
    parse_int(fields[4], row.neighborhood_size);
    if (row.rank != static_cast<Eigen::Index>(table.rows.size()) + 1) throw fail("ranks must be 1..p without gaps");
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw DataError(path.string() + ": no score rows");
  return table;
}

std::vector<QQRow> make_qq(std::vector<double> scores) {
  if (scores.empty()) throw InvalidInput("no scores for Q-Q data");
  for (double s : scores) {
    if (!std::isfinite(s)) throw InvalidInput("Q-Q data needs finite scores");
  }
  std::sort(scores.begin(), scores.end());
  const boost::math::normal standard;
  const double p = static_cast<double>(scores.size());
  std::vector<QQRow> rows;
  rows.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double prob = (static_cast<double>(i) + 0.5) / p;
    rows.push_back({prob, boost::math::quantile(standard, prob), scores[i]});
  }
  return rows;
}

void write_qq(std::ostream& out, const std::vector<QQRow>& rows) {
  out << kQQHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.probability) << '\t' << format_number(r.theoretical_quantile) << '\t'
        << format_number(r.empirical_quantile) << '\n';
  }
}

void write_study_table(std::ostream& out, const sim::StudyResult& result) {
  out << kStudyHeader << '\n';
  for (const auto& m : result.methods) {
    const auto name = sim::to_string(m.method);
    for (Eigen::Index c = 1; c <= m.curves.p(); ++c) {
      const auto i = static_cast<std::size_t>(c - 1);
      out << name << '\t' << c << '\t' << format_number(m.curves.ppv_mean[i]) << '\t'
          << format_number(m.curves.power_mean[i]) << '\n';
    }
  }
}

void write_neighborhood_table(std::ostream& out, const std::vector<std::string>& names,
                              const std::vector<GeneSet>& sets) {
  if (names.size() != sets.size()) throw InvalidInput("need one neighborhood per feature");
  out << kNeighborhoodHeader << '\n';
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << names[i] << '\t' << sets[i].size() << '\t';
    bool first = true;
    for (Eigen::Index g : sets[i].members()) {
      if (!first) out << ',';
      out << names[static_cast<std::size_t>(g)];
      first = false;
    }
    out << '\n';
  }
}

}  // namespace catscore::io
