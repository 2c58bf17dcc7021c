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

#ifndef DPADMM_SWEEP_HPP_
#define DPADMM_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpadmm/admm.hpp"
#include "dpadmm/data.hpp"
#include "dpadmm/losses.hpp"

namespace dpadmm {

enum class Algo { kSsAdmm, kMpAdmm, kDpSgd };

Algo MakeAlgo(const std::string& name);
std::string AlgoName(Algo algo);

// A cross-validated sweep over algorithms x lambdas x one noise grid. The
// noise grid is either explicit sigmas or target epsilons (calibrated per
// cell); exactly one of the two must be nonempty.
struct SweepPlan {
  std::vector<Algo> algos;
  std::vector<double> lambdas;
  std::vector<double> sigma_grid;
  std::vector<double> epsilon_grid;
  int folds = 10;
  int repetitions = 10;
  double delta = 1e-8;

  LossModel loss;
  double clip = 1.0;
  std::int64_t iterations = 100;  // epochs for mpADMM
  std::int64_t batch_size = 0;    // 0: ceil(sqrt(train fold size))
  double rho_ssadmm = 0.25;
  double rho_mpadmm = 0.5;
  double eta0 = 1.0;
  StepSchedule schedule = StepSchedule::kInverseEpoch;
  double eta_mp = 1.0;

  std::uint64_t seed = 0;
  int jobs = 1;
  // Optional ground-truth support; enables the xi coverage metrics.
  std::vector<int> relevant;
};

// One training run inside a sweep. All fields except wall_ms (and error on
// failure) are deterministic functions of the plan and its seed; the
// accounting fields are recomputable from the config fields alone.
struct RunRecord {
  std::string algo;
  std::string loss;
  double lambda = 0.0;
  double rho = 0.0;
  double eta0 = 0.0;
  double sigma = 0.0;
  std::int64_t iterations = 0;  // "T"
  std::int64_t batch_size = 0;  // "m"; full-batch algorithms use n
  std::int64_t n = 0;           // training fold size
  double clip = 0.0;
  std::string schedule;
  std::uint64_t seed = 0;
  int fold = 0;
  int rep = 0;
  std::optional<double> target_epsilon;
  std::optional<double> epsilon;
  double delta = 0.0;
  std::optional<double> alpha_star;
  double accuracy = 0.0;
  double objective = 0.0;
  std::optional<double> xi_20, xi_25, xi_30, xi_40;
  double wall_ms = 0.0;
  std::string error;  // empty on success
};

struct SweepResult {
  std::vector<RunRecord> records;
  bool all_ok = true;
};

// Runs every (algo, lambda, noise, fold, rep) combination; failures are
// captured in the record instead of aborting. Runs execute in parallel up
// to plan.jobs; record order is independent of scheduling.
SweepResult RunExperiment(const SweepPlan& plan, const Dataset& data);

void WriteRecordsJsonl(const std::vector<RunRecord>& records, const std::string& path);
void WriteSummaryCsv(const std::vector<RunRecord>& records, const std::string& path);
// Tidy (epsilon, algo, metric, value) rows for plotting.
void WritePlotData(const std::vector<RunRecord>& records, const std::string& path);

}  // namespace dpadmm

#endif  // DPADMM_SWEEP_HPP_
