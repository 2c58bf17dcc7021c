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

#include "dpadmm/accounting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace dpadmm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log of the binomial coefficient C(n, k) via lgamma.
double LogBinomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Streaming log-sum-exp accumulator: keeps log(sum of exp(terms)) without
// materializing the term list.
class LogSumExp {
 public:
  void Add(double log_term) {
    if (log_term == -kInf) return;
    if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  double Value() const {
    if (max_ == -kInf) return -kInf;
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -kInf;
  double sum_ = 0.0;
};

void ValidateGrid(const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) {
    throw std::invalid_argument("alpha grid must be nonempty");
  }
  double prev = 1.0;
  for (double a : alpha_grid) {
    if (!(a > 1.0)) {
      throw std::invalid_argument("alpha grid entries must be > 1");
    }
    if (!(a > prev) && prev != 1.0) {
      throw std::invalid_argument("alpha grid must be strictly increasing");
    }
    prev = a;
  }
}

}  // namespace

RenyiCurve::RenyiCurve(std::vector<RdpPoint> entries) : entries_(std::move(entries)) {
  double prev_alpha = 1.0;
  for (const RdpPoint& pt : entries_) {
    if (!(pt.alpha > 1.0)) {
      throw std::invalid_argument("RenyiCurve: alpha must be > 1");
    }
    if (pt.alpha <= prev_alpha && prev_alpha != 1.0) {
      throw std::invalid_argument("RenyiCurve: alphas must be strictly increasing");
    }
    if (!std::isfinite(pt.epsilon) || pt.epsilon < 0.0) {
      throw std::invalid_argument("RenyiCurve: epsilon must be finite and >= 0");
    }
    prev_alpha = pt.alpha;
  }
}

RenyiCurve RenyiCurve::Zero(const std::vector<double>& alpha_grid) {
  ValidateGrid(alpha_grid);
  std::vector<RdpPoint> pts;
  pts.reserve(alpha_grid.size());
  for (double a : alpha_grid) pts.push_back({a, 0.0});
  return RenyiCurve(std::move(pts));
}

bool RenyiCurve::SameGrid(const RenyiCurve& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].alpha != other.entries_[i].alpha) return false;
  }
  return true;
}

std::vector<double> DefaultAlphaGrid() {
  std::vector<double> grid;
  grid.reserve(63);
  for (int a = 2; a <= 64; ++a) grid.push_back(static_cast<double>(a));
  return grid;
}

double GaussianRdpAt(const GaussianMechanismSpec& spec, double alpha) {
  if (!(spec.sigma > 0.0)) {
    throw std::invalid_argument("invalid mechanism: sigma must be > 0");
  }
  if (!std::isfinite(spec.sensitivity) || spec.sensitivity < 0.0) {
    throw std::invalid_argument("invalid mechanism: sensitivity must be finite and >= 0");
  }
  return alpha * spec.sensitivity * spec.sensitivity / (2.0 * spec.sigma * spec.sigma);
}

RenyiCurve GaussianRdp(const GaussianMechanismSpec& spec,
                       const std::vector<double>& alpha_grid) {
  ValidateGrid(alpha_grid);
  std::vector<RdpPoint> pts;
  pts.reserve(alpha_grid.size());
  for (double a : alpha_grid) pts.push_back({a, GaussianRdpAt(spec, a)});
  return RenyiCurve(std::move(pts));
}

double SubsampledRdp(const std::function<double(int)>& base_epsilon, double q,
                     int alpha) {
  if (alpha < 3) {
    throw std::invalid_argument("unsupported order: subsampled RDP requires integer alpha >= 3");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("invalid ratio: q must lie in [0, 1]");
  }
  if (q == 0.0) return 0.0;

  const double log_q = std::log(q);

  // Log of the series without its leading 1; the 1 is reattached through
  // log1p below so that tiny series values keep full relative precision.
  LogSumExp lse;

  // j = 2 term: q^2 C(alpha,2) min{4 (e^{eps(2)} - 1), 2 e^{eps(2)}},
  // with the min taken between logs. expm1 keeps the first branch accurate
  // for small eps(2); eps(2) = 0 drops the term entirely.
  const double eps2 = base_epsilon(2);
  const double em1 = std::expm1(eps2);
  const double log_min =
      em1 <= 0.0 ? -kInf
                 : std::min(std::log(4.0) + std::log(em1), std::log(2.0) + eps2);
  lse.Add(2.0 * log_q + LogBinomial(alpha, 2) + log_min);

  for (int j = 3; j <= alpha; ++j) {
    lse.Add(j * log_q + LogBinomial(alpha, j) + std::log(2.0) +
            (j - 1.0) * base_epsilon(j));
  }

  const double log_series = lse.Value();
  if (log_series == -kInf) return 0.0;
  // log(1 + e^{log_series}) evaluated through the side that cannot lose
  // precision or overflow.
  const double log_total = log_series > 0.0
                               ? log_series + std::log1p(std::exp(-log_series))
                               : std::log1p(std::exp(log_series));
  return log_total / (alpha - 1.0);
}

RenyiCurve Compose(const std::vector<RenyiCurve>& curves) {
  if (curves.empty()) return RenyiCurve::Zero(DefaultAlphaGrid());
  std::vector<RdpPoint> out = curves.front().entries();
  for (std::size_t c = 1; c < curves.size(); ++c) {
    if (!curves.front().SameGrid(curves[c])) {
      throw std::invalid_argument("grid mismatch: composed curves must share an alpha grid");
    }
    const auto& entries = curves[c].entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].epsilon += entries[i].epsilon;
    }
  }
  return RenyiCurve(std::move(out));
}

RenyiCurve Repeat(const RenyiCurve& curve, double k) {
  if (!(k >= 0.0)) {
    throw std::invalid_argument("repeat count must be >= 0");
  }
  std::vector<RdpPoint> out = curve.entries();
  for (RdpPoint& pt : out) pt.epsilon *= k;
  return RenyiCurve(std::move(out));
}

ApproxDp ToApproxDp(const RenyiCurve& curve, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (curve.empty()) {
    throw std::invalid_argument("cannot convert an empty curve");
  }
  const double log_inv_delta = -std::log(delta);
  double best_eps = kInf;
  double best_alpha = 0.0;
  for (const RdpPoint& pt : curve.entries()) {
    const double eps = pt.epsilon + log_inv_delta / (pt.alpha - 1.0);
    if (eps < best_eps) {
      best_eps = eps;
      best_alpha = pt.alpha;
    }
  }
  return ApproxDp{best_eps, delta, best_alpha};
}

RenyiCurve GaussianIterationsCurve(double sensitivity, double sigma, double q,
                                   std::int64_t iterations,
                                   const std::vector<double>& alpha_grid) {
  ValidateGrid(alpha_grid);
  if (iterations < 0) {
    throw std::invalid_argument("iterations must be >= 0");
  }
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("invalid ratio: q must lie in (0, 1]");
  }
  const GaussianMechanismSpec spec{sensitivity, sigma};
  RenyiCurve per_iteration;
  if (q == 1.0) {
    // The subsample is the whole dataset, so the plain Gaussian bound applies.
    per_iteration = GaussianRdp(spec, alpha_grid);
  } else {
    auto base = [&spec](int j) { return GaussianRdpAt(spec, j); };
    std::vector<RdpPoint> pts;
    for (double a : alpha_grid) {
      const int ai = static_cast<int>(a);
      if (ai < 3 || a != ai) continue;  // amplification needs integer orders >= 3
      pts.push_back({a, SubsampledRdp(base, q, ai)});
    }
    if (pts.empty()) {
      throw std::invalid_argument("alpha grid has no integer orders >= 3");
    }
    per_iteration = RenyiCurve(std::move(pts));
  }
  return Repeat(per_iteration, static_cast<double>(iterations));
}

double BisectNoiseScale(const std::function<double(double)>& accounted_eps,
                        double target_epsilon, double cap_scale) {
  const double cap = 1e6 * cap_scale;
  if (accounted_eps(cap) > target_epsilon) {
    throw InfeasibleBudgetError(
        "infeasible budget: epsilon " + std::to_string(target_epsilon) +
        " unreachable with sigma <= " + std::to_string(cap));
  }

  double lo = 1e-10 * cap_scale;
  double hi = cap;
  if (accounted_eps(lo) <= target_epsilon) return lo;
  // Invariant: eps(hi) <= target < eps(lo); eps is decreasing in sigma.
  while (hi - lo > 1e-3 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (accounted_eps(mid) <= target_epsilon) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double CalibrateSigma(const DpBudget& target, std::int64_t iterations, double q,
                      double sensitivity, const std::vector<double>& alpha_grid) {
  if (!(target.epsilon > 0.0)) {
    throw std::invalid_argument("target epsilon must be > 0");
  }
  if (!(target.delta > 0.0 && target.delta < 1.0)) {
    throw std::invalid_argument("target delta must lie in (0, 1)");
  }
  if (iterations < 1) {
    throw std::invalid_argument("iterations must be >= 1");
  }
  if (sensitivity == 0.0) {
    // Nothing is released about any record; any positive noise scale works.
    return std::numeric_limits<double>::min();
  }

  const auto accounted_eps = [&](double sigma) {
    return ToApproxDp(
               GaussianIterationsCurve(sensitivity, sigma, q, iterations, alpha_grid),
               target.delta)
        .epsilon;
  };
  return BisectNoiseScale(accounted_eps, target.epsilon, sensitivity);
}

}  // namespace dpadmm
