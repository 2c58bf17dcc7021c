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

#ifndef DPADMM_METRICS_HPP_
#define DPADMM_METRICS_HPP_

#include <span>

#include <Eigen/Core>

#include "dpadmm/data.hpp"

namespace dpadmm {

// Fraction of test rows with sign(x^T s) == label; sign(0) counts as +1.
double Accuracy(const Eigen::VectorXd& model, const Dataset& test);

// Coverage of the relevant coordinates among the top-k model coordinates by
// absolute value (ties broken by ascending index).
double XiCoverage(const Eigen::VectorXd& model, std::span<const int> relevant,
                  int k);

}  // namespace dpadmm

#endif  // DPADMM_METRICS_HPP_
