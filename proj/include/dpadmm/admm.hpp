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

#ifndef DPADMM_ADMM_HPP_
#define DPADMM_ADMM_HPP_

#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace dpadmm {

// Primal variables x, z and dual variable y of one linearized ADMM run.
struct AdmmState {
  Eigen::VectorXd x;
  Eigen::VectorXd z;
  Eigen::VectorXd y;
  std::int64_t k = 0;

  // All-zero start of dimension p.
  static AdmmState Zero(Eigen::Index p) {
    return AdmmState{Eigen::VectorXd::Zero(p), Eigen::VectorXd::Zero(p),
                     Eigen::VectorXd::Zero(p), 0};
  }
};

enum class StepSchedule { kConstant, kInverseEpoch, kInverseSqrt };

StepSchedule MakeSchedule(const std::string& name);
std::string ScheduleName(StepSchedule schedule);

struct AdmmParams {
  double rho = 0.25;
  double lambda = 0.0;
  double eta0 = 1.0;
  StepSchedule schedule = StepSchedule::kInverseEpoch;
  std::int64_t epoch_length = 1;
};

// Learning rate at iteration k (0-based): eta0 for the constant schedule,
// eta0 / ceil((k+1)/epoch_length) per expected epoch, eta0 / sqrt(k+1) for
// the decreasing schedule.
double StepSize(const AdmmParams& params, std::int64_t k);

// Closed-form minimizer of the linearized augmented Lagrangian:
//   x' = (-grad - y + rho z + x / eta) / (rho + 1/eta).
Eigen::VectorXd XUpdate(const AdmmState& state, const Eigen::VectorXd& grad,
                        const AdmmParams& params, std::int64_t k);

// Elementwise shrink-toward-zero by t (the proximal map of t * ||.||_1).
Eigen::VectorXd SoftThreshold(const Eigen::VectorXd& w, double t);

// z' = S_{lambda/rho}(x' + y / rho).
Eigen::VectorXd ZUpdate(const Eigen::VectorXd& x_next, const Eigen::VectorXd& y,
                        const AdmmParams& params);

// y' = y + rho (x' - z').
Eigen::VectorXd YUpdate(const AdmmState& state, const Eigen::VectorXd& x_next,
                        const Eigen::VectorXd& z_next, const AdmmParams& params);

}  // namespace dpadmm

#endif  // DPADMM_ADMM_HPP_
