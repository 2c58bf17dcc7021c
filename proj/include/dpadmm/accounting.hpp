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

#ifndef DPADMM_ACCOUNTING_HPP_
#define DPADMM_ACCOUNTING_HPP_

#include <functional>
#include <stdexcept>
#include <vector>

namespace dpadmm {

// One point of a Renyi-DP guarantee: the mechanism is (alpha, epsilon)-RDP.
struct RdpPoint {
  double alpha;
  double epsilon;
};

// A Renyi-DP guarantee evaluated on a grid of orders alpha.
//
// Invariants: alphas are strictly greater than 1, strictly increasing and
// distinct; epsilons are finite and non-negative.
class RenyiCurve {
 public:
  RenyiCurve() = default;
  explicit RenyiCurve(std::vector<RdpPoint> entries);

  // The all-zero curve on the given grid (identity of composition).
  static RenyiCurve Zero(const std::vector<double>& alpha_grid);

  const std::vector<RdpPoint>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool SameGrid(const RenyiCurve& other) const;

 private:
  std::vector<RdpPoint> entries_;
};

// Gaussian mechanism releasing a vector with L2 sensitivity `sensitivity`
// plus N(0, sigma^2 I) noise.
struct GaussianMechanismSpec {
  double sensitivity;
  double sigma;
};

// Approximate-DP budget.
struct DpBudget {
  double epsilon;
  double delta;
};

// Result of converting an RDP curve to approximate DP, together with the
// grid order that attained the minimum.
struct ApproxDp {
  double epsilon;
  double delta;
  double alpha_star;
};

// Thrown by CalibrateSigma when no noise scale below the cap meets the target.
class InfeasibleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer orders 2..64 inclusive.
std::vector<double> DefaultAlphaGrid();

// RDP of the Gaussian mechanism at a single order: alpha * Delta^2 / (2 sigma^2).
double GaussianRdpAt(const GaussianMechanismSpec& spec, double alpha);

// Gaussian-mechanism RDP curve over the grid.
RenyiCurve GaussianRdp(const GaussianMechanismSpec& spec,
                       const std::vector<double>& alpha_grid);

// Amplified RDP of a mechanism run on a without-replacement subsample with
// sampling ratio q, at integer order alpha >= 3. `base_epsilon(j)` must
// return the mechanism's RDP at integer orders 2 <= j <= alpha.
//
// The bound is
//   (1/(alpha-1)) * log(1 + q^2 C(alpha,2) min{4(e^{eps(2)}-1), 2 e^{eps(2)}}
//                         + sum_{j=3}^{alpha} q^j C(alpha,j) 2 e^{(j-1) eps(j)})
// and is evaluated entirely in the log domain (log-binomials via lgamma,
// streaming log-sum-exp) so that no intermediate term overflows.
double SubsampledRdp(const std::function<double(int)>& base_epsilon, double q,
                     int alpha);

// Pointwise sum of curves sharing one grid. An empty list composes to the
// zero curve on the default grid.
RenyiCurve Compose(const std::vector<RenyiCurve>& curves);

// k-fold self-composition (pointwise multiply by k).
RenyiCurve Repeat(const RenyiCurve& curve, double k);

// Convert a curve to approximate DP at the given delta:
//   eps(delta) = min over grid alpha of eps(alpha) + log(1/delta)/(alpha - 1).
ApproxDp ToApproxDp(const RenyiCurve& curve, double delta);

// Full forward accountant for `iterations` releases of a Gaussian mechanism
// run on subsamples with ratio q. For q < 1 each release is amplified by
// subsampling (grid restricted to integer orders >= 3); at q = 1 the
// subsample is the whole dataset and the plain Gaussian curve applies.
RenyiCurve GaussianIterationsCurve(double sensitivity, double sigma, double q,
                                   std::int64_t iterations,
                                   const std::vector<double>& alpha_grid);

// Smallest noise scale (on a bisection grid with relative tolerance 1e-3)
// whose accounted conversion satisfies eps <= target.epsilon at target.delta.
// Throws InfeasibleBudgetError if no sigma <= 1e6 * sensitivity works.
double CalibrateSigma(const DpBudget& target, std::int64_t iterations, double q,
                      double sensitivity, const std::vector<double>& alpha_grid);

// Generic form of the bisection behind CalibrateSigma: `accounted_eps` maps a
// noise scale to the converted epsilon (must be non-increasing in sigma), and
// the cap is 1e6 * cap_scale.
double BisectNoiseScale(const std::function<double(double)>& accounted_eps,
                        double target_epsilon, double cap_scale);

}  // namespace dpadmm

#endif  // DPADMM_ACCOUNTING_HPP_
