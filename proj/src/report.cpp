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

#include "dpadmm/report.hpp"

#include <fstream>
#include <sstream>

namespace dpadmm {

nlohmann::ordered_json ReportToJson(const RunReport& report) {
  nlohmann::ordered_json j;
  j["config"] = report.config;
  j["seed"] = report.seed;
  if (report.converted_budget) {
    j["epsilon"] = report.converted_budget->epsilon;
    j["delta"] = report.converted_budget->delta;
    j["alpha_star"] = report.converted_budget->alpha_star;
  } else {
    // Non-private run (sigma == 0): no finite epsilon exists.
    j["epsilon"] = nullptr;
    j["delta"] = nullptr;
    j["alpha_star"] = nullptr;
  }
  if (report.rdp_curve) {
    nlohmann::ordered_json curve = nlohmann::ordered_json::array();
    for (const RdpPoint& pt : report.rdp_curve->entries()) {
      curve.push_back({pt.alpha, pt.epsilon});
    }
    j["rdp_curve"] = std::move(curve);
  } else {
    j["rdp_curve"] = nullptr;
  }
  j["final_model"] = std::vector<double>(
      report.final_model.data(), report.final_model.data() + report.final_model.size());
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const TracePoint& pt : report.trace) {
    trace.push_back({pt.objective, pt.primal_residual});
  }
  j["trace"] = std::move(trace);
  j["trace_note"] = "non-private diagnostic; not charged to the privacy budget";
  j["wall_ms"] = report.wall_ms;
  return j;
}

void WriteReport(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << ReportToJson(report).dump(2) << "\n";
}

std::string CurveToCsv(const RenyiCurve& curve) {
  std::ostringstream out;
  out.precision(17);
  out << "alpha,epsilon\n";
  for (const RdpPoint& pt : curve.entries()) {
    out << pt.alpha << "," << pt.epsilon << "\n";
  }
  return out.str();
}

}  // namespace dpadmm
