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

#include "dpadmm/dpsgd.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dpadmm/kernels.hpp"
#include "dpadmm/ssadmm.hpp"

namespace dpadmm {

RunReport TrainDpSgd(const Dataset& data, const LossModel& model,
                     const DpSgdConfig& cfg, const NoiseSource& noise) {
  const auto start_time = std::chrono::steady_clock::now();
  const std::int64_t n = data.n();
  if (n == 0) throw std::invalid_argument("TrainDpSgd: empty dataset");
  const std::int64_t m =
      cfg.batch_size > 0
          ? cfg.batch_size
          : static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (m > n) throw std::invalid_argument("TrainDpSgd: batch size exceeds dataset size");
  if (cfg.iterations < 0) throw std::invalid_argument("TrainDpSgd: iterations must be >= 0");
  if (cfg.sigma < 0.0) throw std::invalid_argument("TrainDpSgd: sigma must be >= 0");

  AdmmParams steps;  // reused only for the step-size schedule
  steps.eta0 = cfg.eta0;
  steps.schedule = cfg.schedule;
  steps.epoch_length = cfg.epoch_length;

  const Eigen::Index p = data.p();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(p);

  RunReport report;
  report.seed = noise.seed();
  if (cfg.trace) report.trace.reserve(cfg.iterations);

  for (std::int64_t k = 0; k < cfg.iterations; ++k) {
    NoiseStream sampling = noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kBatchSampling);
    const std::vector<int> batch = SampleWithoutReplacement(sampling, n, m);

    Eigen::VectorXd grad = BatchGradient(model, x, data, batch, cfg.clip);
    NoiseStream noise_stream =
        noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kGradientNoise);
    grad += GaussianVector(noise_stream, p, cfg.sigma);

    const double eta = StepSize(steps, k);
    x = SoftThreshold(x - eta * grad, cfg.lambda * eta);
    if (!x.allFinite()) {
      throw NonFiniteIterateError("TrainDpSgd: non-finite iterate at iteration " +
                                  std::to_string(k));
    }

    if (cfg.trace) {
      report.trace.push_back(TracePoint{Objective(model, x, data, cfg.lambda), 0.0});
    }
  }

  report.final_model = x;
  if (cfg.sigma > 0.0) {
    const double q = static_cast<double>(m) / static_cast<double>(n);
    report.rdp_curve = GaussianIterationsCurve(GradientSensitivity(cfg.clip, m), cfg.sigma,
                                               q, cfg.iterations, cfg.alpha_grid);
    report.converted_budget = ToApproxDp(*report.rdp_curve, cfg.delta);
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start_time)
                       .count();
  return report;
}

}  // namespace dpadmm
