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

#include "dpadmm/losses.hpp"

#include <cmath>
#include <stdexcept>

#include "dpadmm/kernels.hpp"

namespace dpadmm {
namespace {

// log(1 + exp(t)) without overflow for large |t|.
double Softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

// 1 / (1 + exp(-t)), evaluated through the side that cannot overflow.
double Sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

}  // namespace

LossModel MakeLossModel(const std::string& name, double huber_h) {
  if (name == "logistic") return LossModel{LossKind::kLogistic, huber_h};
  if (name == "hsvm") return LossModel{LossKind::kHuberizedHinge, huber_h};
  throw std::invalid_argument("unknown loss '" + name + "' (expected logistic|hsvm)");
}

std::string LossName(const LossModel& model) {
  return model.kind == LossKind::kLogistic ? "logistic" : "hsvm";
}

double MarginLoss(const LossModel& model, double z) {
  switch (model.kind) {
    case LossKind::kLogistic:
      return Softplus(-z);
    case LossKind::kHuberizedHinge: {
      const double h = model.huber_h;
      if (!(h > 0.0)) throw std::invalid_argument("huber_h must be > 0");
      if (z > 1.0 + h) return 0.0;
      if (z >= 1.0 - h) {
        const double r = 1.0 + h - z;
        return r * r / (4.0 * h);
      }
      return 1.0 - z;
    }
  }
  throw std::logic_error("unreachable");
}

double MarginLossDerivative(const LossModel& model, double z) {
  switch (model.kind) {
    case LossKind::kLogistic:
      return -Sigmoid(-z);
    case LossKind::kHuberizedHinge: {
      const double h = model.huber_h;
      if (!(h > 0.0)) throw std::invalid_argument("huber_h must be > 0");
      if (z > 1.0 + h) return 0.0;
      // The loss is C^1, so the middle expression is also valid at both
      // boundaries.
      if (z >= 1.0 - h) return -(1.0 + h - z) / (2.0 * h);
      return -1.0;
    }
  }
  throw std::logic_error("unreachable");
}

double ExampleLoss(const LossModel& model, const Eigen::VectorXd& x,
                   const Example& d) {
  if (x.size() != d.features.size()) {
    throw std::invalid_argument("ExampleLoss: dimension mismatch");
  }
  return MarginLoss(model, d.label * x.dot(d.features));
}

Eigen::VectorXd ExampleGrad(const LossModel& model, const Eigen::VectorXd& x,
                            const Example& d) {
  if (x.size() != d.features.size()) {
    throw std::invalid_argument("ExampleGrad: dimension mismatch");
  }
  const double z = d.label * x.dot(d.features);
  return MarginLossDerivative(model, z) * d.label * d.features;
}

double Objective(const LossModel& model, const Eigen::VectorXd& x,
                 const Dataset& data, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("Objective: lambda must be >= 0");
  return MeanLoss(model, x, data) + lambda * x.lpNorm<1>();
}

}  // namespace dpadmm
