// Copyright 2026 The dpadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpadmm/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <Eigen/Cholesky>
#include <json.hpp>

#include "dpadmm/noise.hpp"

namespace dpadmm {
namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double ParseCell(const std::string& cell, std::size_t row, std::size_t col) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\r' || *(end - 1) == '\t')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw CsvError("non-numeric cell at row " + std::to_string(row) + ", column " +
                   std::to_string(col) + ": '" + cell + "'");
  }
  return value;
}

}  // namespace

Dataset LoadCsv(const std::string& path, const std::string& label_column,
                bool has_header) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");

  std::string line;
  std::vector<std::string> header;
  if (has_header) {
    if (!std::getline(in, line)) throw CsvError("empty file: '" + path + "'");
    header = SplitCsvLine(line);
    for (auto& name : header) {
      while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
    }
  }

  std::vector<std::vector<double>> rows;
  std::size_t width = has_header ? header.size() : 0;
  std::size_t row_number = has_header ? 1 : 0;
  while (std::getline(in, line)) {
    ++row_number;
    if (line.empty() || line == "\r") continue;
    const auto cells = SplitCsvLine(line);
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw CsvError("row " + std::to_string(row_number) + " has " +
                     std::to_string(cells.size()) + " cells, expected " +
                     std::to_string(width));
    }
    std::vector<double> parsed(width);
    for (std::size_t c = 0; c < width; ++c) parsed[c] = ParseCell(cells[c], row_number, c);
    rows.push_back(std::move(parsed));
  }
  if (rows.empty()) throw CsvError("no data rows in '" + path + "'");

  // Resolve the label column: name (needs header), index, or -1 for last.
  std::size_t label_idx = width - 1;
  if (!label_column.empty()) {
    int parsed_idx = 0;
    const auto [ptr, ec] = std::from_chars(
        label_column.data(), label_column.data() + label_column.size(), parsed_idx);
    if (ec == std::errc{} && ptr == label_column.data() + label_column.size()) {
      label_idx = parsed_idx < 0 ? width + parsed_idx : static_cast<std::size_t>(parsed_idx);
      if (label_idx >= width) throw CsvError("label column index out of range");
    } else {
      const auto it = std::find(header.begin(), header.end(), label_column);
      if (it == header.end()) {
        throw CsvError("label column '" + label_column + "' not found in header");
      }
      label_idx = static_cast<std::size_t>(it - header.begin());
    }
  }

  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(width - 1);
  Dataset data;
  data.features.resize(n, p);
  data.labels.resize(n);
  bool any_zero = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index c = 0;
    for (std::size_t j = 0; j < width; ++j) {
      if (j == label_idx) {
        data.labels[i] = rows[i][j];
        if (rows[i][j] == 0.0) any_zero = true;
      } else {
        data.features(i, c++) = rows[i][j];
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double l = data.labels[i];
    if (any_zero) {
      if (l != 0.0 && l != 1.0) {
        throw CsvError("labels mix {0,1} and other values at row " + std::to_string(i));
      }
      data.labels[i] = l == 0.0 ? -1.0 : 1.0;
    } else if (l != 1.0 && l != -1.0) {
      throw CsvError("label at row " + std::to_string(i) + " is " + std::to_string(l) +
                     "; expected +/-1 or {0,1}");
    }
  }

  if (has_header) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j != label_idx) data.feature_names.push_back(header[j]);
    }
  }
  return data;
}

Dataset Preprocess(const Dataset& raw, bool add_intercept) {
  if (raw.preprocessing.scaled) return raw;

  const Eigen::Index n = raw.n();
  const Eigen::Index p = raw.p();
  Dataset out;
  out.feature_names = raw.feature_names;
  out.labels = raw.labels;
  out.preprocessing.column_min.resize(p);
  out.preprocessing.column_max.resize(p);

  out.features.resize(n, add_intercept ? p + 1 : p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double lo = raw.features.col(j).minCoeff();
    const double hi = raw.features.col(j).maxCoeff();
    out.preprocessing.column_min[j] = lo;
    out.preprocessing.column_max[j] = hi;
    if (hi > lo) {
      out.features.col(j) = (raw.features.col(j).array() - lo) / (hi - lo);
    } else {
      out.features.col(j).setZero();
    }
  }
  if (add_intercept) {
    out.features.col(p).setOnes();
    out.feature_names.push_back("intercept");
    out.preprocessing.intercept_added = true;
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = out.features.row(i).norm();
    if (norm > 1.0) out.features.row(i) /= norm;
  }

  out.preprocessing.scaled = true;
  out.preprocessing.rows_capped = true;
  return out;
}

Eigen::VectorXd SyntheticTrueModel() {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(100);
  for (int i = 0; i < 10; ++i) {
    x[i] = 0.5 * (i + 1);
    x[10 + i] = -x[i];
  }
  return x;
}

std::vector<int> SyntheticRelevantIndices() {
  std::vector<int> idx(20);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

Dataset GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("GenerateSynthetic: n must be >= 1");
  Eigen::VectorXd truth = spec.true_model;
  if (truth.size() == 0) {
    if (spec.p != 100) {
      throw std::invalid_argument("GenerateSynthetic: supply true_model when p != 100");
    }
    truth = SyntheticTrueModel();
  }
  if (truth.size() != spec.p) {
    throw std::invalid_argument("GenerateSynthetic: true_model dimension mismatch");
  }

  const int p = spec.p;
  Eigen::MatrixXd cov(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      cov(i, j) = std::pow(spec.ar_coefficient, std::abs(i - j));
    }
  }
  const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(cov).matrixL();

  Dataset data;
  data.features.resize(spec.n, p);
  data.labels.resize(spec.n);
  const NoiseSource source(spec.seed);

  // Each row owns one stream, so generation parallelizes without changing
  // the result.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < spec.n; ++i) {
    NoiseStream stream = source.Stream(static_cast<std::uint64_t>(i), StreamTag::kSyntheticRow);
    Eigen::VectorXd z(p);
    for (int j = 0; j < p; ++j) z[j] = stream.NextGaussian();
    const Eigen::VectorXd s = chol * z;
    data.features.row(i) = s.transpose();
    const double iota = stream.NextGaussian();
    const double prob = 1.0 / (1.0 + std::exp(-(truth.dot(s)) + iota));
    data.labels[i] = stream.NextUniform() < prob ? 1.0 : -1.0;
  }

  data.feature_names.reserve(p);
  for (int j = 0; j < p; ++j) data.feature_names.push_back("f" + std::to_string(j));
  return data;
}

void WriteSyntheticCsv(const Dataset& data, const SyntheticSpec& spec,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CsvError("cannot write '" + path + "'");
  out.precision(17);
  for (Eigen::Index j = 0; j < data.p(); ++j) out << data.feature_names[j] << ",";
  out << "label\n";
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    for (Eigen::Index j = 0; j < data.p(); ++j) out << data.features(i, j) << ",";
    out << static_cast<int>(data.labels[i]) << "\n";
  }

  nlohmann::ordered_json meta;
  meta["n"] = spec.n;
  meta["p"] = spec.p;
  meta["ar_coefficient"] = spec.ar_coefficient;
  meta["seed"] = spec.seed;
  Eigen::VectorXd truth = spec.true_model.size() ? spec.true_model : SyntheticTrueModel();
  meta["true_model"] = std::vector<double>(truth.data(), truth.data() + truth.size());
  meta["relevant_indices"] = SyntheticRelevantIndices();
  std::ofstream meta_out(path + ".meta.json");
  if (!meta_out) throw CsvError("cannot write '" + path + ".meta.json'");
  meta_out << meta.dump(2) << "\n";
}

Dataset Subset(const Dataset& data, const std::vector<int>& indices) {
  Dataset out;
  out.feature_names = data.feature_names;
  out.preprocessing = data.preprocessing;
  out.features.resize(static_cast<Eigen::Index>(indices.size()), data.p());
  out.labels.resize(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.features.row(static_cast<Eigen::Index>(i)) = data.features.row(indices[i]);
    out.labels[static_cast<Eigen::Index>(i)] = data.labels[indices[i]];
  }
  return out;
}

std::vector<Fold> KFoldSplit(const Dataset& data, int k, std::uint64_t seed) {
  const auto n = static_cast<std::int64_t>(data.n());
  if (k < 2 || k > n) {
    throw std::invalid_argument("KFoldSplit: k must satisfy 2 <= k <= n");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  NoiseStream stream = NoiseSource(seed).Stream(0, StreamTag::kFoldShuffle);
  for (std::int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::int64_t>(stream.NextBounded(static_cast<std::uint64_t>(i + 1)));
    std::swap(order[i], order[j]);
  }

  std::vector<Fold> folds;
  folds.reserve(k);
  std::int64_t start = 0;
  for (int f = 0; f < k; ++f) {
    const std::int64_t size = n / k + (f < n % k ? 1 : 0);
    std::vector<int> test(order.begin() + start, order.begin() + start + size);
    std::vector<int> train;
    train.reserve(n - size);
    train.insert(train.end(), order.begin(), order.begin() + start);
    train.insert(train.end(), order.begin() + start + size, order.end());
    folds.push_back(Fold{Subset(data, train), Subset(data, test)});
    start += size;
  }
  return folds;
}

}  // namespace dpadmm
