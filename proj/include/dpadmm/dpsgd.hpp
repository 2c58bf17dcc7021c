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

#ifndef DPADMM_DPSGD_HPP_
#define DPADMM_DPSGD_HPP_

#include <cstdint>
#include <vector>

#include "dpadmm/accounting.hpp"
#include "dpadmm/admm.hpp"
#include "dpadmm/data.hpp"
#include "dpadmm/losses.hpp"
#include "dpadmm/noise.hpp"
#include "dpadmm/report.hpp"

namespace dpadmm {

// Baseline: differentially private proximal SGD,
//   x <- S_{lambda eta_k}(x - eta_k (clipped mean batch gradient + noise)),
// with the same subsampled-Gaussian accounting as ssADMM.
struct DpSgdConfig {
  std::int64_t batch_size = 0;  // 0: default ceil(sqrt(n))
  std::int64_t iterations = 1;
  double sigma = 0.0;
  double clip = 1.0;
  double lambda = 0.0;
  double eta0 = 1.0;
  StepSchedule schedule = StepSchedule::kInverseEpoch;
  std::int64_t epoch_length = 1;
  std::vector<double> alpha_grid = DefaultAlphaGrid();
  double delta = 1e-8;
  bool trace = true;
};

RunReport TrainDpSgd(const Dataset& data, const LossModel& model,
                     const DpSgdConfig& cfg, const NoiseSource& noise);

}  // namespace dpadmm

#endif  // DPADMM_DPSGD_HPP_
