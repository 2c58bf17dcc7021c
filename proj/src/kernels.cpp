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

#include "dpadmm/kernels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dpadmm {
namespace {

// Examples per reduction block. Block partials are accumulated in index
// order, which pins the floating-point summation order regardless of how
// blocks are scheduled across threads.
constexpr std::int64_t kBlock = 1024;

// grad_i = c * s_i with c = MarginLossDerivative(z) * l; clipping scales the
// coefficient because ||grad_i|| = |c| * ||s_i||.
double ClippedCoefficient(const LossModel& model, const Eigen::VectorXd& x,
                          const Dataset& data, int row, double clip_norm) {
  const auto s = data.features.row(row);
  const double label = data.labels[row];
  const double z = label * s.dot(x);
  double c = MarginLossDerivative(model, z) * label;
  if (c != 0.0) {
    const double norm = std::abs(c) * s.norm();
    if (norm > clip_norm) c *= clip_norm / norm;
  }
  return c;
}

void CheckArgs(const Eigen::VectorXd& x, const Dataset& data, double clip_norm) {
  if (x.size() != data.p()) {
    throw std::invalid_argument("gradient kernel: model dimension mismatch");
  }
  if (!(clip_norm > 0.0)) {
    throw std::invalid_argument("gradient kernel: clip norm must be > 0");
  }
}

}  // namespace

Eigen::VectorXd BatchGradientSerial(const LossModel& model,
                                    const Eigen::VectorXd& x, const Dataset& data,
                                    std::span<const int> indices,
                                    double clip_norm) {
  CheckArgs(x, data, clip_norm);
  if (indices.empty()) {
    throw std::invalid_argument("BatchGradient: empty batch");
  }
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(data.p());
  for (int row : indices) {
    acc += ClippedCoefficient(model, x, data, row, clip_norm) *
           data.features.row(row).transpose();
  }
  return acc / static_cast<double>(indices.size());
}

Eigen::VectorXd BatchGradient(const LossModel& model, const Eigen::VectorXd& x,
                              const Dataset& data, std::span<const int> indices,
                              double clip_norm) {
  CheckArgs(x, data, clip_norm);
  const auto m = static_cast<std::int64_t>(indices.size());
  if (m == 0) {
    throw std::invalid_argument("BatchGradient: empty batch");
  }
  const std::int64_t blocks = (m + kBlock - 1) / kBlock;
  std::vector<Eigen::VectorXd> partial(blocks);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(data.p());
    const std::int64_t end = std::min(m, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < end; ++i) {
      acc += ClippedCoefficient(model, x, data, indices[i], clip_norm) *
             data.features.row(indices[i]).transpose();
    }
    partial[b] = std::move(acc);
  }

  Eigen::VectorXd total = Eigen::VectorXd::Zero(data.p());
  for (std::int64_t b = 0; b < blocks; ++b) total += partial[b];
  return total / static_cast<double>(m);
}

Eigen::VectorXd FullGradient(const LossModel& model, const Eigen::VectorXd& x,
                             const Dataset& data, double clip_norm) {
  std::vector<int> all(data.n());
  std::iota(all.begin(), all.end(), 0);
  return BatchGradient(model, x, data, all, clip_norm);
}

double MeanLossSerial(const LossModel& model, const Eigen::VectorXd& x,
                      const Dataset& data) {
  if (data.n() == 0) throw std::invalid_argument("MeanLoss: empty dataset");
  if (x.size() != data.p()) throw std::invalid_argument("MeanLoss: dimension mismatch");
  double total = 0.0;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    total += MarginLoss(model, data.labels[i] * data.features.row(i).dot(x));
  }
  return total / static_cast<double>(data.n());
}

double MeanLoss(const LossModel& model, const Eigen::VectorXd& x,
                const Dataset& data) {
  if (data.n() == 0) throw std::invalid_argument("MeanLoss: empty dataset");
  if (x.size() != data.p()) throw std::invalid_argument("MeanLoss: dimension mismatch");
  const std::int64_t n = data.n();
  const std::int64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    double acc = 0.0;
    const std::int64_t end = std::min(n, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < end; ++i) {
      acc += MarginLoss(model, data.labels[i] * data.features.row(i).dot(x));
    }
    partial[b] = acc;
  }

  double total = 0.0;
  for (double v : partial) total += v;
  return total / static_cast<double>(n);
}

std::int64_t CorrectPredictionsSerial(const Eigen::VectorXd& x, const Dataset& data) {
  if (x.size() != data.p()) {
    throw std::invalid_argument("CorrectPredictions: dimension mismatch");
  }
  std::int64_t correct = 0;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    const double score = data.features.row(i).dot(x);
    const double predicted = score >= 0.0 ? 1.0 : -1.0;
    if (predicted == data.labels[i]) ++correct;
  }
  return correct;
}

std::int64_t CorrectPredictions(const Eigen::VectorXd& x, const Dataset& data) {
  if (x.size() != data.p()) {
    throw std::invalid_argument("CorrectPredictions: dimension mismatch");
  }
  const std::int64_t n = data.n();
  std::int64_t correct = 0;

#pragma omp parallel for schedule(static) reduction(+ : correct)
  for (std::int64_t i = 0; i < n; ++i) {
    const double score = data.features.row(i).dot(x);
    const double predicted = score >= 0.0 ? 1.0 : -1.0;
    if (predicted == data.labels[i]) ++correct;
  }
  return correct;
}

}  // namespace dpadmm
