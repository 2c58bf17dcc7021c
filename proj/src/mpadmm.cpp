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

#include "dpadmm/mpadmm.hpp"

#include <chrono>
#include <stdexcept>

#include "dpadmm/kernels.hpp"

namespace dpadmm {

EpochSensitivities ComputeEpochSensitivities(double clip, std::int64_t n,
                                             double eta, double rho) {
  if (!(clip > 0.0) || n < 1 || !(eta > 0.0) || !(rho > 0.0)) {
    throw std::invalid_argument("ComputeEpochSensitivities: all arguments must be positive");
  }
  const double dx = 2.0 * clip * eta / (static_cast<double>(n) * (1.0 + eta * rho));
  return EpochSensitivities{dx, dx, rho * dx};
}

RunReport TrainMpAdmm(const Dataset& data, const LossModel& model,
                      const MpAdmmConfig& cfg, const NoiseSource& noise) {
  const auto start_time = std::chrono::steady_clock::now();
  const std::int64_t n = data.n();
  if (n == 0) throw std::invalid_argument("TrainMpAdmm: empty dataset");
  if (cfg.epochs < 0) throw std::invalid_argument("TrainMpAdmm: epochs must be >= 0");
  if (cfg.sigma < 0.0) throw std::invalid_argument("TrainMpAdmm: sigma must be >= 0");
  if (!(cfg.eta > 0.0)) throw std::invalid_argument("TrainMpAdmm: eta must be > 0");

  AdmmParams admm;
  admm.rho = cfg.rho;
  admm.lambda = cfg.lambda;
  admm.eta0 = cfg.eta;
  admm.schedule = StepSchedule::kConstant;

  const Eigen::Index p = data.p();
  AdmmState state = AdmmState::Zero(p);

  RunReport report;
  report.seed = noise.seed();
  if (cfg.trace) report.trace.reserve(cfg.epochs);

  for (std::int64_t k = 0; k < cfg.epochs; ++k) {
    const Eigen::VectorXd grad = FullGradient(model, state.x, data, cfg.clip);

    Eigen::VectorXd x_next = XUpdate(state, grad, admm, k);
    Eigen::VectorXd z_next = ZUpdate(x_next, state.y, admm);
    Eigen::VectorXd y_next = YUpdate(state, x_next, z_next, admm);

    NoiseStream sx = noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kModelNoiseX);
    NoiseStream sy = noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kModelNoiseY);
    NoiseStream sz = noise.Stream(static_cast<std::uint64_t>(k), StreamTag::kModelNoiseZ);
    x_next += GaussianVector(sx, p, cfg.sigma);
    y_next += GaussianVector(sy, p, cfg.sigma);
    z_next += GaussianVector(sz, p, cfg.sigma);

    if (!x_next.allFinite() || !z_next.allFinite() || !y_next.allFinite()) {
      throw NonFiniteIterateError("TrainMpAdmm: non-finite iterate at epoch " +
                                  std::to_string(k));
    }
    // The released noisy state seeds the next epoch.
    state.x = x_next;
    state.z = z_next;
    state.y = y_next;
    state.k = k + 1;

    if (cfg.trace) {
      report.trace.push_back(TracePoint{Objective(model, state.x, data, cfg.lambda),
                                        (state.x - state.z).norm()});
    }
  }

  report.final_model = state.x;
  if (cfg.sigma > 0.0) {
    const EpochSensitivities sens = ComputeEpochSensitivities(cfg.clip, n, cfg.eta, cfg.rho);
    const RenyiCurve epoch_curve =
        Compose({GaussianRdp({sens.dx, cfg.sigma}, cfg.alpha_grid),
                 GaussianRdp({sens.dz, cfg.sigma}, cfg.alpha_grid),
                 GaussianRdp({sens.dy, cfg.sigma}, cfg.alpha_grid)});
    report.rdp_curve = Repeat(epoch_curve, static_cast<double>(cfg.epochs));
    report.converted_budget = ToApproxDp(*report.rdp_curve, cfg.delta);
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start_time)
                       .count();
  return report;
}

}  // namespace dpadmm
