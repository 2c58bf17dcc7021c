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

#ifndef DPADMM_LOSSES_HPP_
#define DPADMM_LOSSES_HPP_

#include <string>

#include <Eigen/Core>

#include "dpadmm/data.hpp"

namespace dpadmm {

enum class LossKind { kLogistic, kHuberizedHinge };

// Margin-based classification loss. The huberized hinge replaces the hinge
// kink with a quadratic zone of half-width `huber_h` around z = 1.
struct LossModel {
  LossKind kind = LossKind::kLogistic;
  double huber_h = 0.5;
};

LossModel MakeLossModel(const std::string& name, double huber_h = 0.5);
std::string LossName(const LossModel& model);

// One labelled example: features s and label l in {-1, +1}.
struct Example {
  Eigen::VectorXd features;
  double label;
};

// Loss as a function of the margin z = l * x^T s.
double MarginLoss(const LossModel& model, double margin);

// d(MarginLoss)/dz. The gradient of the example loss in x is
// MarginLossDerivative(z) * l * s.
double MarginLossDerivative(const LossModel& model, double margin);

double ExampleLoss(const LossModel& model, const Eigen::VectorXd& x,
                   const Example& d);
Eigen::VectorXd ExampleGrad(const LossModel& model, const Eigen::VectorXd& x,
                            const Example& d);

// Mean example loss over the dataset plus lambda * ||x||_1.
double Objective(const LossModel& model, const Eigen::VectorXd& x,
                 const Dataset& data, double lambda);

}  // namespace dpadmm

#endif  // DPADMM_LOSSES_HPP_
