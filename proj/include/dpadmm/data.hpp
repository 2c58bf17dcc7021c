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

#ifndef DPADMM_DATA_HPP_
#define DPADMM_DATA_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dpadmm {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What Preprocess did to the raw features, kept so that the transform can be
// inverted and so that re-running Preprocess is a no-op.
struct PreprocessRecord {
  std::vector<double> column_min;
  std::vector<double> column_max;
  bool scaled = false;
  bool intercept_added = false;
  bool rows_capped = false;
};

// Feature matrix (one row per example) with +/-1 labels.
struct Dataset {
  RowMatrix features;
  Eigen::VectorXd labels;
  std::vector<std::string> feature_names;
  PreprocessRecord preprocessing;

  Eigen::Index n() const { return features.rows(); }
  Eigen::Index p() const { return features.cols(); }
};

// Parses a numeric CSV. `label_column` is a column name (requires a header)
// or a 0-based index; -1 selects the last column. Labels must be +/-1 or
// {0,1} (remapped to -1/+1).
Dataset LoadCsv(const std::string& path, const std::string& label_column,
                bool has_header);

// Min-max scales every column into [0,1] (constant columns map to 0),
// optionally appends an all-ones intercept column, then rescales any row
// with ||s||_2 > 1 back onto the unit ball. Already-preprocessed input is
// returned unchanged.
Dataset Preprocess(const Dataset& raw, bool add_intercept);

// AR(1)-correlated Gaussian features with a sparse ground-truth model and
// noisy logistic labels.
struct SyntheticSpec {
  std::int64_t n;
  int p = 100;
  double ar_coefficient = 0.5;
  // Ground truth; when empty and p == 100 the default sparse model is used.
  Eigen::VectorXd true_model;
  std::uint64_t seed = 0;
};

// The default 100-dim ground truth: coordinates 1..10 are 0.5,1,...,5,
// coordinates 11..20 their negatives, the rest zero.
Eigen::VectorXd SyntheticTrueModel();

// Indices of the nonzero coordinates of the default ground truth (0-based).
std::vector<int> SyntheticRelevantIndices();

Dataset GenerateSynthetic(const SyntheticSpec& spec);

// Writes features+label as CSV with a header row, plus `<path>.meta.json`
// recording the generator spec and seed.
void WriteSyntheticCsv(const Dataset& data, const SyntheticSpec& spec,
                       const std::string& path);

struct Fold {
  Dataset train;
  Dataset test;
};

// Disjoint, exhaustive folds of sizes differing by at most one, shuffled by
// seed.
std::vector<Fold> KFoldSplit(const Dataset& data, int k, std::uint64_t seed);

// Row subset by index.
Dataset Subset(const Dataset& data, const std::vector<int>& indices);

}  // namespace dpadmm

#endif  // DPADMM_DATA_HPP_
