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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dpadmm/admm.hpp"
#include "dpadmm/kernels.hpp"
#include "dpadmm/losses.hpp"
#include "dpadmm/noise.hpp"

using namespace dpadmm;

namespace {

AdmmParams Params(double rho, double lambda, double eta0, StepSchedule schedule,
                  std::int64_t epoch_length = 1) {
  return AdmmParams{rho, lambda, eta0, schedule, epoch_length};
}

}  // namespace

TEST_CASE("step-size schedules") {
  CHECK(StepSize(Params(1, 0, 0.7, StepSchedule::kConstant), 12345) == 0.7);
  CHECK(StepSize(Params(1, 0, 1.0, StepSchedule::kInverseSqrt), 3) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(StepSize(Params(1, 0, 1.0, StepSchedule::kInverseEpoch, 10), 25) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(StepSize(Params(1, 0, 1.0, StepSchedule::kInverseEpoch, 10), 0) == 1.0);
  CHECK(StepSize(Params(1, 0, 1.0, StepSchedule::kInverseEpoch, 10), 9) == 1.0);
  CHECK(StepSize(Params(1, 0, 1.0, StepSchedule::kInverseEpoch, 10), 10) == 0.5);
}

TEST_CASE("x update") {
  SUBCASE("fixed point when grad = 0, y = 0, z = x") {
    AdmmState s = AdmmState::Zero(3);
    s.x << 1.0, -2.0, 0.5;
    s.z = s.x;
    const Eigen::VectorXd next =
        XUpdate(s, Eigen::VectorXd::Zero(3), Params(0.7, 0, 0.3, StepSchedule::kConstant), 0);
    CHECK((next - s.x).norm() < 1e-15);
  }

  SUBCASE("zero state: x' = -g / 2 at rho = eta = 1") {
    AdmmState s = AdmmState::Zero(2);
    Eigen::VectorXd g(2);
    g << 4.0, -6.0;
    const Eigen::VectorXd next = XUpdate(s, g, Params(1, 0, 1, StepSchedule::kConstant), 0);
    CHECK(next[0] == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(next[1] == doctest::Approx(3.0).epsilon(1e-15));
  }

  SUBCASE("linearity: doubling all inputs doubles the output") {
    NoiseStream st = NoiseSource(1).Stream(0, StreamTag::kGradientNoise);
    const AdmmParams params = Params(0.25, 0, 0.8, StepSchedule::kInverseSqrt);
    for (int i = 0; i < 100; ++i) {
      AdmmState s = AdmmState::Zero(4);
      s.x = GaussianVector(st, 4, 1.0);
      s.z = GaussianVector(st, 4, 1.0);
      s.y = GaussianVector(st, 4, 1.0);
      const Eigen::VectorXd g = GaussianVector(st, 4, 1.0);
      AdmmState doubled = s;
      doubled.x *= 2;
      doubled.z *= 2;
      doubled.y *= 2;
      const Eigen::VectorXd a = XUpdate(s, g, params, 3);
      const Eigen::VectorXd b = XUpdate(doubled, 2 * g, params, 3);
      CHECK((b - 2 * a).norm() <= 1e-12 * (1.0 + a.norm()));
    }
  }
}

TEST_CASE("soft thresholding") {
  SUBCASE("branch table") {
    Eigen::VectorXd w(3);
    w << 2.5, -0.5, 1.0;
    const Eigen::VectorXd out = SoftThreshold(w, 1.0);
    CHECK(out[0] == 1.5);
    CHECK(out[1] == 0.0);
    CHECK(out[2] == 0.0);
  }

  SUBCASE("t = 0 is the identity") {
    Eigen::VectorXd w(3);
    w << 0.1, -7.0, 0.0;
    CHECK(SoftThreshold(w, 0.0) == w);
  }

  SUBCASE("non-expansive and elementwise dominance on random pairs") {
    NoiseStream st = NoiseSource(5).Stream(0, StreamTag::kGradientNoise);
    for (double t : {0.01, 0.1, 1.0}) {
      for (int i = 0; i < 10000 / 3; ++i) {
        const Eigen::VectorXd w = GaussianVector(st, 5, 1.5);
        const Eigen::VectorXd v = GaussianVector(st, 5, 1.5);
        const Eigen::VectorXd dw = SoftThreshold(w, t) - SoftThreshold(v, t);
        CHECK(dw.norm() <= (w - v).norm() + 1e-15);
        for (int c = 0; c < 5; ++c) {
          const double diff = w[c] - v[c];
          CHECK(std::abs(dw[c]) <= std::abs(diff) + 1e-15);
          // sign preserved or zero
          CHECK(dw[c] * diff >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("z update") {
  SUBCASE("lambda = 0 keeps x + y / rho") {
    Eigen::VectorXd x(2), y(2);
    x << 1.0, 2.0;
    y << -0.5, 0.5;
    const Eigen::VectorXd z = ZUpdate(x, y, Params(2.0, 0.0, 1, StepSchedule::kConstant));
    CHECK(z[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(z[1] == doctest::Approx(2.25).epsilon(1e-15));
  }

  SUBCASE("full shrinkage inside the threshold") {
    Eigen::VectorXd x(2), y(2);
    x << 0.3, -0.2;
    y << 0.0, 0.0;
    const Eigen::VectorXd z = ZUpdate(x, y, Params(1.0, 0.5, 1, StepSchedule::kConstant));
    CHECK(z == Eigen::VectorXd::Zero(2));
  }

  SUBCASE("worked case rho=2 lambda=1") {
    Eigen::VectorXd x(2), y(2);
    x << 1.0, 0.0;
    y << 0.0, 2.0;
    const Eigen::VectorXd z = ZUpdate(x, y, Params(2.0, 1.0, 1, StepSchedule::kConstant));
    CHECK(z[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(z[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("y update") {
  AdmmState s = AdmmState::Zero(2);
  s.y << 1.0, -1.0;
  Eigen::VectorXd x(2), z(2);
  x << 2.0, 3.0;

  SUBCASE("consensus leaves y unchanged") {
    CHECK(YUpdate(s, x, x, Params(0.7, 0, 1, StepSchedule::kConstant)) == s.y);
  }

  SUBCASE("accumulates rho times the residual") {
    z << 1.0, 1.0;
    const AdmmParams params = Params(0.5, 0, 1, StepSchedule::kConstant);
    const Eigen::VectorXd y1 = YUpdate(s, x, z, params);
    CHECK(y1[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(y1[1] == doctest::Approx(0.0).epsilon(1e-15));
    AdmmState s2 = s;
    s2.y = y1;
    const Eigen::VectorXd y2 = YUpdate(s2, x, z, params);
    CHECK((y2 - (s.y + 2 * 0.5 * (x - z))).norm() < 1e-15);
  }
}

TEST_CASE("full step fixed point and consensus on a small lasso-logistic problem") {
  SUBCASE("grad=0, y=0, z=x, lambda=0 leaves the state unchanged") {
    AdmmState s = AdmmState::Zero(3);
    s.x << 0.4, -0.1, 2.0;
    s.z = s.x;
    const AdmmParams params = Params(0.5, 0.0, 0.7, StepSchedule::kConstant);
    const Eigen::VectorXd x1 = XUpdate(s, Eigen::VectorXd::Zero(3), params, 0);
    const Eigen::VectorXd z1 = ZUpdate(x1, s.y, params);
    const Eigen::VectorXd y1 = YUpdate(s, x1, z1, params);
    CHECK((x1 - s.x).norm() < 1e-14);
    CHECK((z1 - s.z).norm() < 1e-14);
    CHECK(y1.norm() < 1e-14);
  }

  SUBCASE("deterministic full-batch iteration drives ||x - z|| to zero") {
    // tiny synthetic binary problem
    NoiseStream st = NoiseSource(23).Stream(0, StreamTag::kSyntheticRow);
    Dataset data;
    const int n = 40, p = 5;
    data.features.resize(n, p);
    data.labels.resize(n);
    Eigen::VectorXd truth(p);
    truth << 1.0, -1.0, 0.5, 0.0, 0.0;
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd row = GaussianVector(st, p, 1.0);
      row /= std::max(1.0, row.norm());
      data.features.row(i) = row;
      data.labels[i] = truth.dot(row) >= 0 ? 1.0 : -1.0;
    }

    const LossModel model{LossKind::kLogistic, 0.5};
    const AdmmParams params = Params(1.0, 0.01, 1.0, StepSchedule::kInverseSqrt);
    AdmmState s = AdmmState::Zero(p);
    double residual = 1.0;
    for (int k = 0; k < 10000; ++k) {
      const Eigen::VectorXd g = FullGradient(model, s.x, data, 1.0);
      const Eigen::VectorXd x1 = XUpdate(s, g, params, k);
      const Eigen::VectorXd z1 = ZUpdate(x1, s.y, params);
      const Eigen::VectorXd y1 = YUpdate(s, x1, z1, params);
      s.x = x1;
      s.z = z1;
      s.y = y1;
      residual = (s.x - s.z).norm();
      if (residual < 1e-6) break;
    }
    CHECK(residual < 1e-6);
  }
}
