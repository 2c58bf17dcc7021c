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

#include "dpadmm/ssadmm.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "dpadmm/kernels.hpp"

namespace dpadmm {

double GradientSensitivity(double clip, std::int64_t batch_size) {
  if (!(clip > 0.0)) throw std::invalid_argument("clip must be > 0");
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  return 2.0 * clip / static_cast<double>(batch_size);
}

std::vector<int> SampleWithoutReplacement(NoiseStream& stream, std::int64_t n,
                                          std::int64_t m) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("SampleWithoutReplacement: need 1 <= m <= n");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::int64_t j = 0; j < m; ++j) {
    const auto pick =
        j + static_cast<std::int64_t>(stream.NextBounded(static_cast<std::uint64_t>(n - j)));
    std::swap(order[j], order[pick]);
  }
  order.resize(m);
  return order;
}

RunReport TrainSsAdmm(const Dataset& data, const LossModel& model,
                      const SsAdmmConfig& cfg, const NoiseSource& noise) {
  const auto start_time = std::chrono::steady_clock::now();
  const std::int64_t n = data.n();
  if (n == 0) throw std::invalid_argument("TrainSsAdmm: empty dataset");
  const std::int64_t m =
      cfg.batch_size > 0
          ? cfg.batch_size
          : static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (m > n) {
    throw std::invalid_argument("TrainSsAdmm: batch size " + std::to_string(m) +
                                " exceeds dataset size " + std::to_string(n));
  }
  if (cfg.iterations < 0) throw std::invalid_argument("TrainSsAdmm: iterations must be >= 0");
  if (cfg.sigma < 0.0) throw std::invalid_argument("TrainSsAdmm: sigma must be >= 0");

  const Eigen::Index p = data.p();
  AdmmState state = AdmmState::Zero(p);

  RunReport report;
  report.seed = noise.seed();
  if (cfg.trace) report.trace.reserve(cfg.iterations);

  for (std::int64_t k = 0; k < cfg.iterations; ++k) {
    NoiseStream sampling = noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kBatchSampling);
    const std::vector<int> batch = SampleWithoutReplacement(sampling, n, m);

    Eigen::VectorXd grad = BatchGradient(model, state.x, data, batch, cfg.clip);
    NoiseStream noise_stream =
        noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kGradientNoise);
    grad += GaussianVector(noise_stream, p, cfg.sigma);

    const Eigen::VectorXd x_next = XUpdate(state, grad, cfg.admm, k);
    const Eigen::VectorXd z_next = ZUpdate(x_next, state.y, cfg.admm);
    const Eigen::VectorXd y_next = YUpdate(state, x_next, z_next, cfg.admm);
    if (!x_next.allFinite() || !z_next.allFinite() || !y_next.allFinite()) {
      throw NonFiniteIterateError("TrainSsAdmm: non-finite iterate at iteration " +
                                  std::to_string(k));
    }
    state.x = x_next;
    state.z = z_next;
    state.y = y_next;
    state.k = k + 1;

    if (cfg.trace) {
      report.trace.push_back(TracePoint{Objective(model, state.x, data, cfg.admm.lambda),
                                        (state.x - state.z).norm()});
    }
  }

  report.final_model = state.x;
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
