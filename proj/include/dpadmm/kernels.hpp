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

#ifndef DPADMM_KERNELS_HPP_
#define DPADMM_KERNELS_HPP_

#include <span>

#include <Eigen/Core>

#include "dpadmm/data.hpp"
#include "dpadmm/losses.hpp"

namespace dpadmm {

// Data-parallel per-example kernels. The OpenMP versions reduce over
// fixed-size blocks that are combined in index order, so the result is
// bit-identical for any thread count; the *Serial versions are the plain
// reference loops kept for testing and benchmarking.

// Mean of per-example gradients, each clipped to L2 norm <= clip_norm before
// averaging, over the rows listed in `indices`.
Eigen::VectorXd BatchGradient(const LossModel& model, const Eigen::VectorXd& x,
                              const Dataset& data, std::span<const int> indices,
                              double clip_norm);
Eigen::VectorXd BatchGradientSerial(const LossModel& model,
                                    const Eigen::VectorXd& x, const Dataset& data,
                                    std::span<const int> indices,
                                    double clip_norm);

// Same over all rows.
Eigen::VectorXd FullGradient(const LossModel& model, const Eigen::VectorXd& x,
                             const Dataset& data, double clip_norm);

// Mean example loss over all rows (no regularizer).
double MeanLoss(const LossModel& model, const Eigen::VectorXd& x,
                const Dataset& data);
double MeanLossSerial(const LossModel& model, const Eigen::VectorXd& x,
                      const Dataset& data);

// Count of rows with sign(x^T s) == label, sign(0) counting as +1.
std::int64_t CorrectPredictions(const Eigen::VectorXd& x, const Dataset& data);
std::int64_t CorrectPredictionsSerial(const Eigen::VectorXd& x, const Dataset& data);

}  // namespace dpadmm

#endif  // DPADMM_KERNELS_HPP_
