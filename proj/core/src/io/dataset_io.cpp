#include "catscore/io/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "catscore/error.hpp"
#include "catscore/io/tables.hpp"

namespace catscore::io {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw DataError(path.string() + ": file is empty");
  return lines;
}

double parse_cell(std::string_view cell, const std::filesystem::path& path, std::size_t row,
                  std::size_t col) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || cell.empty()) {
    throw DataError(path.string() + ": non-numeric cell '" + std::string(cell) + "' at row " +
                    std::to_string(row) + ", column " + std::to_string(col));
  }
  return value;
}

}  // namespace

LabeledDataset load_dataset(const std::filesystem::path& data_path,
                            const std::filesystem::path& labels_path) {
  const auto lines = read_lines(data_path);
  if (lines.size() < 2) throw DataError(data_path.string() + ": no feature rows");

  const auto header = split_tabs(lines[0]);
  const std::size_t width = split_tabs(lines[1]).size();
  if (width < 2) throw DataError(data_path.string() + ": rows need a name and at least one value");
  // The header may or may not carry a corner cell above the feature names.
  std::size_t first_sample = 0;
  if (header.size() == width) {
    first_sample = 1;
  } else if (header.size() != width - 1) {
    throw DataError(data_path.string() + ": header has " + std::to_string(header.size()) +
                    " fields but rows have " + std::to_string(width));
  }
  std::vector<std::string> samples;
  std::unordered_map<std::string, std::size_t> sample_index;
  for (std::size_t c = first_sample; c < header.size(); ++c) {
    samples.emplace_back(header[c]);
    if (!sample_index.emplace(samples.back(), samples.size() - 1).second) {
      throw DataError(data_path.string() + ": duplicate sample identifier '" + samples.back() + "'");
    }
  }

  const auto p = static_cast<Eigen::Index>(lines.size() - 1);
  Eigen::MatrixXd values(p, static_cast<Eigen::Index>(samples.size()));
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> name_row;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_tabs(lines[r]);
    if (fields.size() != width) {
      throw DataError(data_path.string() + ": row " + std::to_string(r + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " + std::to_string(width));
    }
    names.emplace_back(fields[0]);
    const auto [it, inserted] = name_row.emplace(names.back(), r + 1);
    if (!inserted) {
      throw DataError(data_path.string() + ": duplicate feature name '" + names.back() +
                      "' at rows " + std::to_string(it->second) + " and " + std::to_string(r + 1));
    }
    for (std::size_t c = 1; c < fields.size(); ++c) {
      values(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c - 1)) =
          parse_cell(fields[c], data_path, r + 1, c + 1);
    }
  }

  const auto label_lines = read_lines(labels_path);
  std::vector<int> group_of(samples.size(), 0);
  for (std::size_t r = 0; r < label_lines.size(); ++r) {
    if (label_lines[r].empty()) continue;
    const auto fields = split_tabs(label_lines[r]);
    if (fields.size() != 2) {
      throw DataError(labels_path.string() + ": line " + std::to_string(r + 1) +
                      " must have two tab-separated fields");
    }
    const auto it = sample_index.find(std::string(fields[0]));
    if (it == sample_index.end()) {
      throw DataError(labels_path.string() + ": unknown sample '" + std::string(fields[0]) +
                      "' at line " + std::to_string(r + 1));
    }
    int group = 0;
    if (fields[1] == "1") {
      group = 1;
    } else if (fields[1] == "2") {
      group = 2;
    } else {
      throw DataError(labels_path.string() + ": group must be 1 or 2 at line " +
                      std::to_string(r + 1) + ", got '" + std::string(fields[1]) + "'");
    }
    if (group_of[it->second] != 0) {
      throw DataError(labels_path.string() + ": sample '" + it->first + "' is labeled twice");
    }
    group_of[it->second] = group;
  }
  std::vector<Group> labels;
  labels.reserve(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (group_of[k] == 0) {
      throw DataError(labels_path.string() + ": sample '" + samples[k] + "' has no label");
    }
    labels.push_back(group_of[k] == 1 ? Group::kFirst : Group::kSecond);
  }
  return LabeledDataset(std::move(values), std::move(labels), std::move(names));
}

void write_dataset(const LabeledDataset& data, const std::filesystem::path& data_path,
                   const std::filesystem::path& labels_path) {
  std::ofstream out(data_path);
  if (!out) throw DataError("cannot write " + data_path.string());
  out << "feature";
  for (Eigen::Index k = 0; k < data.n(); ++k) out << "\ts" << (k + 1);
  out << '\n';
  for (Eigen::Index i = 0; i < data.p(); ++i) {
    out << data.feature_names()[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < data.n(); ++k) out << '\t' << format_number(data.values()(i, k), 17);
    out << '\n';
  }
  std::ofstream labels(labels_path);
  if (!labels) throw DataError("cannot write " + labels_path.string());
  for (Eigen::Index k = 0; k < data.n(); ++k) {
    labels << 's' << (k + 1) << '\t'
           << (data.labels()[static_cast<std::size_t>(k)] == Group::kFirst ? 1 : 2) << '\n';
  }
}

Eigen::MatrixXd read_correlation_matrix(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  const auto p = static_cast<Eigen::Index>(lines.size());
  Eigen::MatrixXd m(p, p);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto fields = split_tabs(lines[r]);
    if (static_cast<Eigen::Index>(fields.size()) != p) {
      throw DataError(path.string() + ": row " + std::to_string(r + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " + std::to_string(p));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_cell(fields[c], path, r + 1, c + 1);
    }
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8) {
    throw DataError(path.string() + ": matrix is not symmetric (max asymmetry " +
                    format_number(asym, 3) + ")");
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace catscore::io
