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

#include "dpadmm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "dpadmm/kernels.hpp"

namespace dpadmm {

double Accuracy(const Eigen::VectorXd& model, const Dataset& test) {
  if (test.n() == 0) throw std::invalid_argument("Accuracy: empty test set");
  return static_cast<double>(CorrectPredictions(model, test)) /
         static_cast<double>(test.n());
}

double XiCoverage(const Eigen::VectorXd& model, std::span<const int> relevant,
                  int k) {
  const auto p = static_cast<int>(model.size());
  if (k > p) throw std::invalid_argument("XiCoverage: k exceeds model dimension");
  if (relevant.empty()) throw std::invalid_argument("XiCoverage: empty relevant set");

  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&model](int a, int b) {
    const double ma = std::abs(model[a]);
    const double mb = std::abs(model[b]);
    if (ma != mb) return ma > mb;
    return a < b;
  });

  const std::unordered_set<int> relevant_set(relevant.begin(), relevant.end());
  int hits = 0;
  for (int i = 0; i < k; ++i) {
    if (relevant_set.count(order[i]) > 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(relevant_set.size());
}

}  // namespace dpadmm
