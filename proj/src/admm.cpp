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

#include "dpadmm/admm.hpp"

#include <cmath>
#include <stdexcept>

namespace dpadmm {

StepSchedule MakeSchedule(const std::string& name) {
  if (name == "constant") return StepSchedule::kConstant;
  if (name == "inverse-epoch") return StepSchedule::kInverseEpoch;
  if (name == "inverse-sqrt") return StepSchedule::kInverseSqrt;
  throw std::invalid_argument("unknown schedule '" + name +
                              "' (expected constant|inverse-epoch|inverse-sqrt)");
}

std::string ScheduleName(StepSchedule schedule) {
  switch (schedule) {
    case StepSchedule::kConstant: return "constant";
    case StepSchedule::kInverseEpoch: return "inverse-epoch";
    case StepSchedule::kInverseSqrt: return "inverse-sqrt";
  }
  throw std::logic_error("unreachable");
}

double StepSize(const AdmmParams& params, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("StepSize: k must be >= 0");
  switch (params.schedule) {
    case StepSchedule::kConstant:
      return params.eta0;
    case StepSchedule::kInverseEpoch: {
      if (params.epoch_length < 1) {
        throw std::invalid_argument("StepSize: epoch_length must be >= 1");
      }
      const std::int64_t epoch = (k + params.epoch_length) / params.epoch_length;
      return params.eta0 / static_cast<double>(epoch);
    }
    case StepSchedule::kInverseSqrt:
      return params.eta0 / std::sqrt(static_cast<double>(k + 1));
  }
  throw std::logic_error("unreachable");
}

Eigen::VectorXd XUpdate(const AdmmState& state, const Eigen::VectorXd& grad,
                        const AdmmParams& params, std::int64_t k) {
  const double eta = StepSize(params, k);
  return (-grad - state.y + params.rho * state.z + state.x / eta) /
         (params.rho + 1.0 / eta);
}

Eigen::VectorXd SoftThreshold(const Eigen::VectorXd& w, double t) {
  if (t < 0.0) throw std::invalid_argument("SoftThreshold: t must be >= 0");
  Eigen::VectorXd out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] > t) {
      out[i] = w[i] - t;
    } else if (w[i] < -t) {
      out[i] = w[i] + t;
    } else {
      out[i] = 0.0;
    }
  }
  return out;
}

Eigen::VectorXd ZUpdate(const Eigen::VectorXd& x_next, const Eigen::VectorXd& y,
                        const AdmmParams& params) {
  if (!(params.rho > 0.0)) throw std::invalid_argument("ZUpdate: rho must be > 0");
  return SoftThreshold(x_next + y / params.rho, params.lambda / params.rho);
}

Eigen::VectorXd YUpdate(const AdmmState& state, const Eigen::VectorXd& x_next,
                        const Eigen::VectorXd& z_next, const AdmmParams& params) {
  return state.y + params.rho * (x_next - z_next);
}

}  // namespace dpadmm
