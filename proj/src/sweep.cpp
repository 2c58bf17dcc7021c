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

#include "dpadmm/sweep.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dpadmm/dpsgd.hpp"
#include "dpadmm/kernels.hpp"
#include "dpadmm/metrics.hpp"
#include "dpadmm/mpadmm.hpp"
#include "dpadmm/noise.hpp"
#include "dpadmm/ssadmm.hpp"

namespace dpadmm {
namespace {

struct Cell {
  Algo algo;
  double lambda;
  // Exactly one of the two is set.
  std::optional<double> sigma;
  std::optional<double> target_epsilon;
};

std::int64_t DefaultBatch(std::int64_t n) {
  return static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t cell, std::uint64_t fold,
                         std::uint64_t rep) {
  std::uint64_t h = MixBits(base);
  h = MixBits(h ^ cell);
  h = MixBits(h ^ fold);
  h = MixBits(h ^ rep);
  return h;
}

// Noise scale for an mpADMM cell hitting a target budget: inverts the
// T x (three Gaussian releases per epoch) accountant.
double CalibrateSigmaMpAdmm(const DpBudget& target, std::int64_t epochs, double clip,
                            std::int64_t n, double eta, double rho,
                            const std::vector<double>& grid) {
  const EpochSensitivities sens = ComputeEpochSensitivities(clip, n, eta, rho);
  const auto accounted = [&](double sigma) {
    const RenyiCurve epoch = Compose({GaussianRdp({sens.dx, sigma}, grid),
                                      GaussianRdp({sens.dz, sigma}, grid),
                                      GaussianRdp({sens.dy, sigma}, grid)});
    return ToApproxDp(Repeat(epoch, static_cast<double>(epochs)), target.delta).epsilon;
  };
  return BisectNoiseScale(accounted, target.epsilon, sens.dx);
}

void FillXi(RunRecord& record, const Eigen::VectorXd& model,
            const std::vector<int>& relevant) {
  if (relevant.empty()) return;
  const auto p = static_cast<int>(model.size());
  if (20 <= p) record.xi_20 = XiCoverage(model, relevant, 20);
  if (25 <= p) record.xi_25 = XiCoverage(model, relevant, 25);
  if (30 <= p) record.xi_30 = XiCoverage(model, relevant, 30);
  if (40 <= p) record.xi_40 = XiCoverage(model, relevant, 40);
}

RunRecord ExecuteRun(const SweepPlan& plan, const Cell& cell, const Fold& fold_data,
                     int fold, int rep, std::uint64_t run_seed) {
  RunRecord record;
  record.algo = AlgoName(cell.algo);
  record.loss = LossName(plan.loss);
  record.lambda = cell.lambda;
  record.clip = plan.clip;
  record.seed = run_seed;
  record.fold = fold;
  record.rep = rep;
  record.delta = plan.delta;
  record.target_epsilon = cell.target_epsilon;
  record.iterations = plan.iterations;

  const std::int64_t n = fold_data.train.n();
  record.n = n;
  const NoiseSource noise(run_seed);

  RunReport report;
  if (cell.algo == Algo::kSsAdmm || cell.algo == Algo::kDpSgd) {
    const std::int64_t m = plan.batch_size > 0 ? plan.batch_size : DefaultBatch(n);
    record.batch_size = m;
    record.eta0 = plan.eta0;
    record.schedule = ScheduleName(plan.schedule);
    const double q = static_cast<double>(m) / static_cast<double>(n);
    double sigma = cell.sigma.value_or(0.0);
    if (cell.target_epsilon) {
      sigma = CalibrateSigma({*cell.target_epsilon, plan.delta}, plan.iterations, q,
                             GradientSensitivity(plan.clip, m), DefaultAlphaGrid());
    }
    record.sigma = sigma;

    const std::int64_t epoch_length = std::max<std::int64_t>(1, (n + m - 1) / m);
    if (cell.algo == Algo::kSsAdmm) {
      record.rho = plan.rho_ssadmm;
      SsAdmmConfig cfg;
      cfg.batch_size = m;
      cfg.iterations = plan.iterations;
      cfg.sigma = sigma;
      cfg.clip = plan.clip;
      cfg.admm = AdmmParams{plan.rho_ssadmm, cell.lambda, plan.eta0, plan.schedule,
                            epoch_length};
      cfg.delta = plan.delta;
      cfg.trace = false;
      report = TrainSsAdmm(fold_data.train, plan.loss, cfg, noise);
    } else {
      record.rho = 0.0;
      DpSgdConfig cfg;
      cfg.batch_size = m;
      cfg.iterations = plan.iterations;
      cfg.sigma = sigma;
      cfg.clip = plan.clip;
      cfg.lambda = cell.lambda;
      cfg.eta0 = plan.eta0;
      cfg.schedule = plan.schedule;
      cfg.epoch_length = epoch_length;
      cfg.delta = plan.delta;
      cfg.trace = false;
      report = TrainDpSgd(fold_data.train, plan.loss, cfg, noise);
    }
  } else {
    record.batch_size = n;
    record.rho = plan.rho_mpadmm;
    record.eta0 = plan.eta_mp;
    record.schedule = ScheduleName(StepSchedule::kConstant);
    double sigma = cell.sigma.value_or(0.0);
    if (cell.target_epsilon) {
      sigma = CalibrateSigmaMpAdmm({*cell.target_epsilon, plan.delta}, plan.iterations,
                                   plan.clip, n, plan.eta_mp, plan.rho_mpadmm,
                                   DefaultAlphaGrid());
    }
    record.sigma = sigma;

    MpAdmmConfig cfg;
    cfg.epochs = plan.iterations;
    cfg.sigma = sigma;
    cfg.clip = plan.clip;
    cfg.eta = plan.eta_mp;
    cfg.rho = plan.rho_mpadmm;
    cfg.lambda = cell.lambda;
    cfg.delta = plan.delta;
    cfg.trace = false;
    report = TrainMpAdmm(fold_data.train, plan.loss, cfg, noise);
  }

  if (report.converted_budget) {
    record.epsilon = report.converted_budget->epsilon;
    record.alpha_star = report.converted_budget->alpha_star;
  }
  record.accuracy = Accuracy(report.final_model, fold_data.test);
  record.objective = Objective(plan.loss, report.final_model, fold_data.test, cell.lambda);
  FillXi(record, report.final_model, plan.relevant);
  record.wall_ms = report.wall_ms;
  return record;
}

nlohmann::ordered_json RecordToJson(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["algo"] = r.algo;
  j["loss"] = r.loss;
  j["lambda"] = r.lambda;
  j["rho"] = r.rho;
  j["eta0"] = r.eta0;
  j["sigma"] = r.sigma;
  j["T"] = r.iterations;
  j["m"] = r.batch_size;
  j["n"] = r.n;
  j["clip"] = r.clip;
  j["schedule"] = r.schedule;
  j["seed"] = r.seed;
  j["fold"] = r.fold;
  j["rep"] = r.rep;
  if (r.target_epsilon) j["target_epsilon"] = *r.target_epsilon; else j["target_epsilon"] = nullptr;
  if (r.epsilon) j["epsilon"] = *r.epsilon; else j["epsilon"] = nullptr;
  j["delta"] = r.delta;
  if (r.alpha_star) j["alpha_star"] = *r.alpha_star; else j["alpha_star"] = nullptr;
  j["accuracy"] = r.accuracy;
  j["objective"] = r.objective;
  if (r.xi_20) j["xi_20"] = *r.xi_20; else j["xi_20"] = nullptr;
  if (r.xi_25) j["xi_25"] = *r.xi_25; else j["xi_25"] = nullptr;
  if (r.xi_30) j["xi_30"] = *r.xi_30; else j["xi_30"] = nullptr;
  if (r.xi_40) j["xi_40"] = *r.xi_40; else j["xi_40"] = nullptr;
  j["wall_ms"] = r.wall_ms;
  j["error"] = r.error;
  return j;
}

struct CellStats {
  std::vector<const RunRecord*> ok;
  int failures = 0;
};

double Mean(const std::vector<double>& v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double SampleStd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::map<std::string, CellStats> GroupByCell(const std::vector<RunRecord>& records) {
  std::map<std::string, CellStats> groups;
  for (const RunRecord& r : records) {
    std::ostringstream key;
    key.precision(17);
    key << r.algo << "|" << r.loss << "|" << r.lambda << "|";
    if (r.target_epsilon) {
      key << "eps=" << *r.target_epsilon;
    } else {
      key << "sigma=" << r.sigma;
    }
    CellStats& cell = groups[key.str()];
    if (r.error.empty()) {
      cell.ok.push_back(&r);
    } else {
      ++cell.failures;
    }
  }
  return groups;
}

std::vector<double> Collect(const CellStats& cell,
                            const std::function<std::optional<double>(const RunRecord&)>& get) {
  std::vector<double> out;
  out.reserve(cell.ok.size());
  for (const RunRecord* r : cell.ok) {
    if (const auto v = get(*r)) out.push_back(*v);
  }
  return out;
}

}  // namespace

Algo MakeAlgo(const std::string& name) {
  if (name == "ssadmm") return Algo::kSsAdmm;
  if (name == "mpadmm") return Algo::kMpAdmm;
  if (name == "dpsgd") return Algo::kDpSgd;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected ssadmm|mpadmm|dpsgd)");
}

std::string AlgoName(Algo algo) {
  switch (algo) {
    case Algo::kSsAdmm: return "ssadmm";
    case Algo::kMpAdmm: return "mpadmm";
    case Algo::kDpSgd: return "dpsgd";
  }
  throw std::logic_error("unreachable");
}

SweepResult RunExperiment(const SweepPlan& plan, const Dataset& data) {
  if (plan.algos.empty() || plan.lambdas.empty()) {
    throw std::invalid_argument("RunExperiment: plan needs at least one algo and lambda");
  }
  if (plan.sigma_grid.empty() == plan.epsilon_grid.empty()) {
    throw std::invalid_argument(
        "RunExperiment: exactly one of the sigma grid and the epsilon grid must be set");
  }
  if (plan.folds < 2 || plan.repetitions < 1) {
    throw std::invalid_argument("RunExperiment: need folds >= 2 and repetitions >= 1");
  }

  std::vector<Cell> cells;
  for (Algo algo : plan.algos) {
    for (double lambda : plan.lambdas) {
      for (double sigma : plan.sigma_grid) {
        cells.push_back(Cell{algo, lambda, sigma, std::nullopt});
      }
      for (double eps : plan.epsilon_grid) {
        cells.push_back(Cell{algo, lambda, std::nullopt, eps});
      }
    }
  }

  const std::vector<Fold> folds = KFoldSplit(data, plan.folds, plan.seed);

  struct Task {
    std::size_t cell;
    int fold;
    int rep;
  };
  std::vector<Task> tasks;
  tasks.reserve(cells.size() * plan.folds * plan.repetitions);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int f = 0; f < plan.folds; ++f) {
      for (int r = 0; r < plan.repetitions; ++r) tasks.push_back(Task{c, f, r});
    }
  }

  SweepResult result;
  result.records.resize(tasks.size());
  bool all_ok = true;

  const int jobs = std::max(1, plan.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) shared(result) \
    reduction(&& : all_ok)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t) {
    const Task& task = tasks[t];
    const Cell& cell = cells[task.cell];
    const std::uint64_t run_seed =
        DeriveSeed(plan.seed, task.cell, static_cast<std::uint64_t>(task.fold),
                   static_cast<std::uint64_t>(task.rep));
    try {
      result.records[t] = ExecuteRun(plan, cell, folds[task.fold], task.fold,
                                     task.rep, run_seed);
    } catch (const std::exception& e) {
      RunRecord failed;
      failed.algo = AlgoName(cell.algo);
      failed.loss = LossName(plan.loss);
      failed.lambda = cell.lambda;
      failed.target_epsilon = cell.target_epsilon;
      failed.sigma = cell.sigma.value_or(0.0);
      failed.delta = plan.delta;
      failed.fold = task.fold;
      failed.rep = task.rep;
      failed.seed = run_seed;
      failed.error = e.what();
      result.records[t] = std::move(failed);
      all_ok = false;
    }
  }

  result.all_ok = all_ok;
  return result;
}

void WriteRecordsJsonl(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (const RunRecord& r : records) out << RecordToJson(r).dump() << "\n";
}

void WriteSummaryCsv(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.precision(12);
  out << "algo,loss,lambda,target_epsilon,sigma_mean,runs,failures,"
         "epsilon_mean,accuracy_mean,accuracy_std,objective_mean,objective_std,"
         "xi_20_mean,xi_25_mean,xi_30_mean,xi_40_mean\n";

  const auto groups = GroupByCell(records);
  for (const auto& [key, cell] : groups) {
    if (cell.ok.empty() && cell.failures == 0) continue;
    const RunRecord* head = cell.ok.empty() ? nullptr : cell.ok.front();
    const auto acc = Collect(cell, [](const RunRecord& r) { return std::optional(r.accuracy); });
    const auto obj = Collect(cell, [](const RunRecord& r) { return std::optional(r.objective); });
    const auto eps = Collect(cell, [](const RunRecord& r) { return r.epsilon; });
    const auto sig = Collect(cell, [](const RunRecord& r) { return std::optional(r.sigma); });
    const auto xi20 = Collect(cell, [](const RunRecord& r) { return r.xi_20; });
    const auto xi25 = Collect(cell, [](const RunRecord& r) { return r.xi_25; });
    const auto xi30 = Collect(cell, [](const RunRecord& r) { return r.xi_30; });
    const auto xi40 = Collect(cell, [](const RunRecord& r) { return r.xi_40; });

    std::istringstream key_fields(key);
    std::string algo, loss, lambda, noise;
    std::getline(key_fields, algo, '|');
    std::getline(key_fields, loss, '|');
    std::getline(key_fields, lambda, '|');
    std::getline(key_fields, noise, '|');

    out << algo << "," << loss << "," << lambda << ",";
    if (head && head->target_epsilon) out << *head->target_epsilon;
    out << "," << Mean(sig) << "," << cell.ok.size() << "," << cell.failures << ",";
    if (!eps.empty()) out << Mean(eps);
    out << "," << Mean(acc) << "," << SampleStd(acc) << "," << Mean(obj) << ","
        << SampleStd(obj) << ",";
    if (!xi20.empty()) out << Mean(xi20);
    out << ",";
    if (!xi25.empty()) out << Mean(xi25);
    out << ",";
    if (!xi30.empty()) out << Mean(xi30);
    out << ",";
    if (!xi40.empty()) out << Mean(xi40);
    out << "\n";
  }
}

void WritePlotData(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.precision(12);
  out << "epsilon,algo,lambda,metric,value\n";

  const auto groups = GroupByCell(records);
  for (const auto& [key, cell] : groups) {
    if (cell.ok.empty()) continue;
    const RunRecord* head = cell.ok.front();
    const auto eps = Collect(cell, [](const RunRecord& r) { return r.epsilon; });
    const double x = head->target_epsilon ? *head->target_epsilon
                                          : (eps.empty() ? 0.0 : Mean(eps));
    const auto emit = [&](const std::string& metric, const std::vector<double>& values) {
      if (values.empty()) return;
      out << x << "," << head->algo << "," << head->lambda << "," << metric << ","
          << Mean(values) << "\n";
    };
    emit("accuracy", Collect(cell, [](const RunRecord& r) { return std::optional(r.accuracy); }));
    emit("objective", Collect(cell, [](const RunRecord& r) { return std::optional(r.objective); }));
    emit("xi_20", Collect(cell, [](const RunRecord& r) { return r.xi_20; }));
    emit("xi_25", Collect(cell, [](const RunRecord& r) { return r.xi_25; }));
    emit("xi_30", Collect(cell, [](const RunRecord& r) { return r.xi_30; }));
    emit("xi_40", Collect(cell, [](const RunRecord& r) { return r.xi_40; }));
  }
}

}  // namespace dpadmm
