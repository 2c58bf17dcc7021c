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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpadmm/accounting.hpp"
#include "dpadmm/data.hpp"
#include "dpadmm/dpsgd.hpp"
#include "dpadmm/kernels.hpp"
#include "dpadmm/metrics.hpp"
#include "dpadmm/mpadmm.hpp"
#include "dpadmm/report.hpp"
#include "dpadmm/ssadmm.hpp"
#include "dpadmm/sweep.hpp"

namespace dpadmm::cli {
namespace {

struct DataArgs {
  std::string path;
  std::string label_column = "-1";
  bool has_header = false;
  std::int64_t synthetic_n = 0;
  std::uint64_t data_seed = 0;
  bool no_preprocess = false;
  bool no_intercept = false;
};

void AddDataOptions(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.path, "Input CSV (one label column, numeric features)");
  cmd->add_option("--label-col", args.label_column,
                  "Label column: name (needs --has-header) or index; -1 = last");
  cmd->add_flag("--has-header", args.has_header, "First CSV row is a header");
  cmd->add_option("--synthetic", args.synthetic_n,
                  "Generate the synthetic dataset with this many rows instead of reading CSV");
  cmd->add_option("--data-seed", args.data_seed, "Seed for --synthetic");
  cmd->add_flag("--no-preprocess", args.no_preprocess,
                "Skip min-max scaling / intercept / row-norm capping");
  cmd->add_flag("--no-intercept", args.no_intercept, "Do not append an intercept column");
}

Dataset LoadDataset(const DataArgs& args) {
  Dataset raw;
  if (args.synthetic_n > 0) {
    SyntheticSpec spec;
    spec.n = args.synthetic_n;
    spec.seed = args.data_seed;
    raw = GenerateSynthetic(spec);
  } else if (!args.path.empty()) {
    raw = LoadCsv(args.path, args.label_column, args.has_header);
  } else {
    throw std::invalid_argument("provide --data or --synthetic");
  }
  if (args.no_preprocess) return raw;
  return Preprocess(raw, /*add_intercept=*/!args.no_intercept);
}

std::vector<int> LoadRelevant(const std::string& meta_path, const std::string& csv_path) {
  std::string path = meta_path;
  if (path.empty() && !csv_path.empty()) {
    const std::string candidate = csv_path + ".meta.json";
    if (std::filesystem::exists(candidate)) path = candidate;
  }
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read metadata '" + path + "'");
  nlohmann::json meta;
  in >> meta;
  return meta.value("relevant_indices", std::vector<int>{});
}

struct TrainArgs {
  DataArgs data;
  std::string algo = "ssadmm";
  std::string loss = "logistic";
  double huber_h = 0.5;
  double lambda = 0.0;
  double rho = -1.0;  // <0: per-algorithm default
  double eta0 = 1.0;
  std::string schedule;  // empty: per-algorithm default
  std::int64_t batch = 0;
  std::int64_t iters = 100;
  double sigma = 0.0;
  double clip = 1.0;
  double target_eps = 0.0;
  double target_delta = 1e-8;
  double delta = 1e-8;
  std::uint64_t seed = 0;
  std::string out = "report.json";
};

int RunTrain(const TrainArgs& args, std::ostream& out) {
  const Dataset data = LoadDataset(args.data);
  const LossModel loss = MakeLossModel(args.loss, args.huber_h);
  const NoiseSource noise(args.seed);
  const std::int64_t n = data.n();
  const std::int64_t batch =
      args.batch > 0 ? args.batch
                     : static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));

  RunReport report;
  nlohmann::ordered_json echo;
  echo["algo"] = args.algo;
  echo["loss"] = args.loss;
  echo["lambda"] = args.lambda;
  echo["eta0"] = args.eta0;
  echo["T"] = args.iters;
  echo["n"] = n;
  echo["clip"] = args.clip;
  echo["delta"] = args.delta;
  echo["seed"] = args.seed;

  if (args.algo == "mpadmm") {
    MpAdmmConfig cfg;
    cfg.epochs = args.iters;
    cfg.clip = args.clip;
    cfg.eta = args.eta0;
    cfg.rho = args.rho < 0.0 ? 0.5 : args.rho;
    cfg.lambda = args.lambda;
    cfg.delta = args.delta;
    cfg.sigma = args.sigma;
    if (args.target_eps > 0.0) {
      const EpochSensitivities sens = ComputeEpochSensitivities(cfg.clip, n, cfg.eta, cfg.rho);
      cfg.sigma = BisectNoiseScale(
          [&](double s) {
            const RenyiCurve epoch = Compose({GaussianRdp({sens.dx, s}, cfg.alpha_grid),
                                              GaussianRdp({sens.dz, s}, cfg.alpha_grid),
                                              GaussianRdp({sens.dy, s}, cfg.alpha_grid)});
            return ToApproxDp(Repeat(epoch, static_cast<double>(cfg.epochs)), args.target_delta)
                .epsilon;
          },
          args.target_eps, sens.dx);
      cfg.delta = args.target_delta;
    }
    echo["rho"] = cfg.rho;
    echo["sigma"] = cfg.sigma;
    echo["schedule"] = "constant";
    echo["m"] = n;
    report = TrainMpAdmm(data, loss, cfg, noise);
  } else if (args.algo == "ssadmm" || args.algo == "dpsgd") {
    const double q = static_cast<double>(batch) / static_cast<double>(n);
    double sigma = args.sigma;
    double delta = args.delta;
    if (args.target_eps > 0.0) {
      sigma = CalibrateSigma({args.target_eps, args.target_delta}, args.iters, q,
                             GradientSensitivity(args.clip, batch), DefaultAlphaGrid());
      delta = args.target_delta;
    }
    const std::int64_t epoch_length = std::max<std::int64_t>(1, (n + batch - 1) / batch);
    const StepSchedule schedule =
        args.schedule.empty() ? StepSchedule::kInverseEpoch : MakeSchedule(args.schedule);
    echo["sigma"] = sigma;
    echo["m"] = batch;
    echo["schedule"] = ScheduleName(schedule);
    if (args.algo == "ssadmm") {
      SsAdmmConfig cfg;
      cfg.batch_size = batch;
      cfg.iterations = args.iters;
      cfg.sigma = sigma;
      cfg.clip = args.clip;
      cfg.admm = AdmmParams{args.rho < 0.0 ? 0.25 : args.rho, args.lambda, args.eta0,
                            schedule, epoch_length};
      cfg.delta = delta;
      echo["rho"] = cfg.admm.rho;
      report = TrainSsAdmm(data, loss, cfg, noise);
    } else {
      DpSgdConfig cfg;
      cfg.batch_size = batch;
      cfg.iterations = args.iters;
      cfg.sigma = sigma;
      cfg.clip = args.clip;
      cfg.lambda = args.lambda;
      cfg.eta0 = args.eta0;
      cfg.schedule = schedule;
      cfg.epoch_length = epoch_length;
      cfg.delta = delta;
      echo["rho"] = 0.0;
      report = TrainDpSgd(data, loss, cfg, noise);
    }
  } else {
    throw std::invalid_argument("unknown --algo '" + args.algo + "'");
  }

  report.config = std::move(echo);
  WriteReport(report, args.out);
  out << "train: wrote " << args.out;
  if (report.converted_budget) {
    out << " (epsilon=" << report.converted_budget->epsilon
        << " at delta=" << report.converted_budget->delta
        << ", alpha*=" << report.converted_budget->alpha_star << ")";
  } else {
    out << " (non-private: sigma=0)";
  }
  out << "\n";
  return 0;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Renyi-DP stochastic ADMM for L1-regularized classification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file with key=value lines; flags override");

  // --- account ---------------------------------------------------------
  struct {
    double sensitivity = 1.0;
    double sigma = 1.0;
    double q = 1.0;
    std::int64_t iterations = 1;
    double delta = 1e-8;
    std::string curve_out;
  } acct;
  CLI::App* account = app.add_subcommand(
      "account", "Forward accountant: RDP curve and (epsilon, delta) conversion");
  account->add_option("--sensitivity", acct.sensitivity, "L2 sensitivity per release")
      ->check(CLI::NonNegativeNumber);
  account->add_option("--sigma", acct.sigma, "Gaussian noise stddev")->required();
  account->add_option("--q", acct.q, "Subsampling ratio in (0,1]");
  account->add_option("--iterations", acct.iterations, "Number of composed releases");
  account->add_option("--delta", acct.delta, "Conversion delta");
  account->add_option("--curve-out", acct.curve_out, "Write the curve CSV here instead of stdout");

  // --- calibrate -------------------------------------------------------
  struct {
    double target_eps = 1.0;
    double target_delta = 1e-8;
    std::int64_t iterations = 1;
    double q = 1.0;
    double sensitivity = 1.0;
  } cal;
  CLI::App* calibrate =
      app.add_subcommand("calibrate", "Smallest sigma meeting a target (epsilon, delta)");
  calibrate->add_option("--target-eps", cal.target_eps)->required();
  calibrate->add_option("--target-delta", cal.target_delta);
  calibrate->add_option("--iterations", cal.iterations)->required();
  calibrate->add_option("--q", cal.q);
  calibrate->add_option("--sensitivity", cal.sensitivity)->required();

  // --- generate-data ---------------------------------------------------
  struct {
    std::int64_t n = 40000;
    std::uint64_t seed = 0;
    std::string out = "synthetic.csv";
  } gen;
  CLI::App* generate = app.add_subcommand(
      "generate-data", "AR(1)-correlated synthetic dataset with 20 relevant features");
  generate->add_option("--n", gen.n, "Rows to generate")->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--out", gen.out, "Output CSV path (metadata sidecar written next to it)");

  // --- train -----------------------------------------------------------
  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "Train one model and write a run report");
  AddDataOptions(train, train_args.data);
  train->add_option("--algo", train_args.algo, "ssadmm|mpadmm|dpsgd");
  train->add_option("--loss", train_args.loss, "logistic|hsvm");
  train->add_option("--huber-h", train_args.huber_h, "Huberized-hinge smoothing half-width");
  train->add_option("--lambda", train_args.lambda, "L1 coefficient");
  train->add_option("--rho", train_args.rho, "ADMM penalty (default 0.25 ssadmm / 0.5 mpadmm)");
  train->add_option("--eta0,--eta", train_args.eta0,
                    "Base learning rate (mpADMM: the constant rate)");
  train->add_option("--schedule", train_args.schedule, "constant|inverse-epoch|inverse-sqrt");
  train->add_option("--batch", train_args.batch, "Mini-batch size m (default ceil(sqrt(n)))");
  train->add_option("--iters,--epochs", train_args.iters, "Iterations (mpADMM: epochs)");
  train->add_option("--sigma", train_args.sigma, "Noise stddev (0 = non-private)");
  train->add_option("--clip", train_args.clip, "Per-example gradient clip C");
  train->add_option("--target-eps", train_args.target_eps,
                    "Calibrate sigma to this epsilon instead of --sigma");
  train->add_option("--target-delta", train_args.target_delta, "Delta for --target-eps");
  train->add_option("--delta", train_args.delta, "Reporting delta");
  train->add_option("--seed", train_args.seed, "Noise seed");
  train->add_option("--out", train_args.out, "Report path");

  // --- evaluate ---------------------------------------------------------
  struct {
    DataArgs data;
    std::string report_path;
    std::string meta;
    double lambda = 0.0;
  } eval;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Metrics of a trained model on a dataset");
  AddDataOptions(evaluate, eval.data);
  evaluate->add_option("--report", eval.report_path, "Run report with the model")->required();
  evaluate->add_option("--meta", eval.meta, "Metadata sidecar with relevant_indices (for xi)");
  evaluate->add_option("--lambda", eval.lambda, "L1 coefficient for the reported objective");

  // --- sweep -------------------------------------------------------------
  struct {
    DataArgs data;
    std::vector<std::string> algos{"ssadmm"};
    std::vector<double> lambdas{1e-4};
    std::vector<double> sigmas;
    std::vector<double> epsilons;
    int folds = 10;
    int reps = 10;
    double delta = 1e-8;
    std::string loss = "logistic";
    double huber_h = 0.5;
    double clip = 1.0;
    std::int64_t iters = 100;
    std::int64_t batch = 0;
    double rho_ssadmm = 0.25;
    double rho_mpadmm = 0.5;
    double eta0 = 1.0;
    std::string schedule = "inverse-epoch";
    double eta_mp = 1.0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out_dir = ".";
    std::string meta;
    bool emit_plot_data = false;
  } sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Cross-validated grid of training runs");
  AddDataOptions(sweep, sw.data);
  sweep->add_option("--algos", sw.algos, "Algorithms to run")->delimiter(',');
  sweep->add_option("--lambdas", sw.lambdas, "L1 coefficients")->delimiter(',');
  sweep->add_option("--sigmas", sw.sigmas, "Noise grid (exclusive with --epsilons)")
      ->delimiter(',');
  sweep->add_option("--epsilons", sw.epsilons, "Target epsilon grid")->delimiter(',');
  sweep->add_option("--folds", sw.folds, "Cross-validation folds");
  sweep->add_option("--reps", sw.reps, "Repetitions per fold");
  sweep->add_option("--delta", sw.delta, "Budget delta");
  sweep->add_option("--loss", sw.loss, "logistic|hsvm");
  sweep->add_option("--huber-h", sw.huber_h, "Huberized-hinge smoothing half-width");
  sweep->add_option("--clip", sw.clip, "Per-example gradient clip C");
  sweep->add_option("--iters", sw.iters, "Iterations (mpADMM: epochs)");
  sweep->add_option("--batch", sw.batch, "Mini-batch size (default ceil(sqrt(n)))");
  sweep->add_option("--rho-ssadmm", sw.rho_ssadmm, "ADMM penalty for ssADMM");
  sweep->add_option("--rho-mpadmm", sw.rho_mpadmm, "ADMM penalty for mpADMM");
  sweep->add_option("--eta0", sw.eta0, "Base learning rate for ssADMM/DP-SGD");
  sweep->add_option("--schedule", sw.schedule, "Step schedule for ssADMM/DP-SGD");
  sweep->add_option("--eta-mp", sw.eta_mp, "Constant learning rate for mpADMM");
  sweep->add_option("--seed", sw.seed, "Base seed (folds and per-run noise derive from it)");
  sweep->add_option("--jobs", sw.jobs, "Parallel runs");
  sweep->add_option("--out-dir", sw.out_dir, "Output directory")
      ->envname("DPADMM_OUTPUT_DIR");
  sweep->add_option("--meta", sw.meta, "Metadata sidecar with relevant_indices (for xi)");
  sweep->add_flag("--emit-plot-data", sw.emit_plot_data,
                  "Also write tidy (epsilon, algo, metric, value) CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    out << err.str();
    return code;
  }

  try {
    if (account->parsed()) {
      const RenyiCurve curve = GaussianIterationsCurve(
          acct.sensitivity, acct.sigma, acct.q, acct.iterations, DefaultAlphaGrid());
      const ApproxDp budget = ToApproxDp(curve, acct.delta);
      if (acct.curve_out.empty()) {
        out << CurveToCsv(curve);
      } else {
        std::ofstream f(acct.curve_out);
        if (!f) throw std::runtime_error("cannot write '" + acct.curve_out + "'");
        f << CurveToCsv(curve);
      }
      out << "epsilon=" << budget.epsilon << " delta=" << budget.delta
          << " alpha_star=" << budget.alpha_star << "\n";
      return 0;
    }
    if (calibrate->parsed()) {
      const double sigma = CalibrateSigma({cal.target_eps, cal.target_delta},
                                          cal.iterations, cal.q, cal.sensitivity,
                                          DefaultAlphaGrid());
      const ApproxDp check = ToApproxDp(
          GaussianIterationsCurve(cal.sensitivity, sigma, cal.q, cal.iterations,
                                  DefaultAlphaGrid()),
          cal.target_delta);
      out << "sigma=" << sigma << " accounted_epsilon=" << check.epsilon
          << " delta=" << check.delta << "\n";
      return 0;
    }
    if (generate->parsed()) {
      SyntheticSpec spec;
      spec.n = gen.n;
      spec.seed = gen.seed;
      WriteSyntheticCsv(GenerateSynthetic(spec), spec, gen.out);
      out << "generate-data: wrote " << gen.out << " and " << gen.out << ".meta.json\n";
      return 0;
    }
    if (train->parsed()) {
      return RunTrain(train_args, out);
    }
    if (evaluate->parsed()) {
      const Dataset data = LoadDataset(eval.data);
      std::ifstream in(eval.report_path);
      if (!in) throw std::runtime_error("cannot read report '" + eval.report_path + "'");
      nlohmann::json report_json;
      in >> report_json;
      const auto coeffs = report_json.at("final_model").get<std::vector<double>>();
      const Eigen::VectorXd model =
          Eigen::Map<const Eigen::VectorXd>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
      const LossModel loss = MakeLossModel(
          report_json.contains("config") && report_json["config"].contains("loss")
              ? report_json["config"]["loss"].get<std::string>()
              : "logistic");
      out << "accuracy=" << Accuracy(model, data)
          << " objective=" << Objective(loss, model, data, eval.lambda);
      const std::vector<int> relevant = LoadRelevant(eval.meta, eval.data.path);
      if (!relevant.empty()) {
        for (int k : {20, 25, 30, 40}) {
          if (k <= model.size()) {
            out << " xi_" << k << "=" << XiCoverage(model, relevant, k);
          }
        }
      }
      out << "\n";
      return 0;
    }
    if (sweep->parsed()) {
      const Dataset data = LoadDataset(sw.data);
      SweepPlan plan;
      for (const auto& a : sw.algos) plan.algos.push_back(MakeAlgo(a));
      plan.lambdas = sw.lambdas;
      plan.sigma_grid = sw.sigmas;
      plan.epsilon_grid = sw.epsilons;
      plan.folds = sw.folds;
      plan.repetitions = sw.reps;
      plan.delta = sw.delta;
      plan.loss = MakeLossModel(sw.loss, sw.huber_h);
      plan.clip = sw.clip;
      plan.iterations = sw.iters;
      plan.batch_size = sw.batch;
      plan.rho_ssadmm = sw.rho_ssadmm;
      plan.rho_mpadmm = sw.rho_mpadmm;
      plan.eta0 = sw.eta0;
      plan.schedule = MakeSchedule(sw.schedule);
      plan.eta_mp = sw.eta_mp;
      plan.seed = sw.seed;
      plan.jobs = sw.jobs;
      plan.relevant = LoadRelevant(sw.meta, sw.data.path);

      const SweepResult result = RunExperiment(plan, data);
      std::filesystem::create_directories(sw.out_dir);
      const std::string records_path = sw.out_dir + "/records.jsonl";
      const std::string summary_path = sw.out_dir + "/summary.csv";
      WriteRecordsJsonl(result.records, records_path);
      WriteSummaryCsv(result.records, summary_path);
      out << "sweep: wrote " << records_path << " and " << summary_path << "\n";
      if (sw.emit_plot_data) {
        const std::string plot_path = sw.out_dir + "/plot.csv";
        WritePlotData(result.records, plot_path);
        out << "sweep: wrote " << plot_path << "\n";
      }
      if (!result.all_ok) {
        out << "sweep: some runs failed (see error fields)\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dpadmm::cli
