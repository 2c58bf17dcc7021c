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

#ifndef DPADMM_SSADMM_HPP_
#define DPADMM_SSADMM_HPP_

#include <cstdint>
#include <vector>

#include "dpadmm/accounting.hpp"
#include "dpadmm/admm.hpp"
#include "dpadmm/data.hpp"
#include "dpadmm/losses.hpp"
#include "dpadmm/noise.hpp"
#include "dpadmm/report.hpp"

namespace dpadmm {

// Subsampled gradient-perturbed stochastic ADMM.
struct SsAdmmConfig {
  std::int64_t batch_size = 0;  // 0: default ceil(sqrt(n))
  std::int64_t iterations = 1;
  double sigma = 0.0;
  double clip = 1.0;
  AdmmParams admm;
  std::vector<double> alpha_grid = DefaultAlphaGrid();
  double delta = 1e-8;
  bool trace = true;
};

// L2 sensitivity of the mean of m per-example gradients each bounded by C
// under single-record replacement: 2C/m.
double GradientSensitivity(double clip, std::int64_t batch_size);

// Uniform draw of m distinct indices from {0, ..., n-1} (partial
// Fisher-Yates driven by the stream).
std::vector<int> SampleWithoutReplacement(NoiseStream& stream, std::int64_t n,
                                          std::int64_t m);

// Runs `iterations` noisy-gradient ADMM steps. Each iteration subsamples a
// batch, clips and averages per-example gradients, perturbs the mean with
// N(0, sigma^2 I), and applies the x/z/y updates. The report carries the
// composed RDP curve (amplified by subsampling) and its conversion.
RunReport TrainSsAdmm(const Dataset& data, const LossModel& model,
                      const SsAdmmConfig& cfg, const NoiseSource& noise);

}  // namespace dpadmm

#endif  // DPADMM_SSADMM_HPP_
