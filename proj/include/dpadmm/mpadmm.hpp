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

#ifndef DPADMM_MPADMM_HPP_
#define DPADMM_MPADMM_HPP_

#include <cstdint>
#include <vector>

#include "dpadmm/accounting.hpp"
#include "dpadmm/admm.hpp"
#include "dpadmm/data.hpp"
#include "dpadmm/losses.hpp"
#include "dpadmm/noise.hpp"
#include "dpadmm/report.hpp"

namespace dpadmm {

// Output-perturbed full-gradient ADMM: each epoch runs one deterministic
// x/z/y update on the whole dataset and releases all three variables with
// independent Gaussian noise.
struct MpAdmmConfig {
  std::int64_t epochs = 1;
  double sigma = 0.0;
  double clip = 1.0;
  double eta = 1.0;  // constant learning rate
  double rho = 0.5;
  double lambda = 0.0;
  std::vector<double> alpha_grid = DefaultAlphaGrid();
  double delta = 1e-8;
  bool trace = true;
};

// Single-record-replacement L2 sensitivity bounds after one epoch started
// from a fixed (released) state: the x update moves by at most
// 2 C eta / (n (1 + eta rho)); z moves by no more than x elementwise, and y
// by no more than rho times x.
struct EpochSensitivities {
  double dx;
  double dz;
  double dy;
};

EpochSensitivities ComputeEpochSensitivities(double clip, std::int64_t n,
                                             double eta, double rho);

RunReport TrainMpAdmm(const Dataset& data, const LossModel& model,
                      const MpAdmmConfig& cfg, const NoiseSource& noise);

}  // namespace dpadmm

#endif  // DPADMM_MPADMM_HPP_
