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

#ifndef DPADMM_REPORT_HPP_
#define DPADMM_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "dpadmm/accounting.hpp"

namespace dpadmm {

// Thrown when an iterate leaves the finite range (diverging step size etc).
class NonFiniteIterateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-iteration diagnostics. The objective is evaluated on the training data
// for reporting only and is not charged to the privacy budget.
struct TracePoint {
  double objective;
  double primal_residual;  // ||x - z||_2 (0 for trainers without a z variable)
};

// Everything one training run produces.
struct RunReport {
  Eigen::VectorXd final_model;
  // Absent when sigma == 0 (the run is not private; epsilon is infinite).
  std::optional<RenyiCurve> rdp_curve;
  std::optional<ApproxDp> converted_budget;
  std::vector<TracePoint> trace;
  nlohmann::ordered_json config;  // echo of the effective configuration
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

// Canonical JSON form. All fields other than wall_ms are deterministic
// functions of (config, seed).
nlohmann::ordered_json ReportToJson(const RunReport& report);

void WriteReport(const RunReport& report, const std::string& path);

// Curve serialization: one "alpha,epsilon" row per grid point.
std::string CurveToCsv(const RenyiCurve& curve);

}  // namespace dpadmm

#endif  // DPADMM_REPORT_HPP_
