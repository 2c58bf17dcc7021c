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

#include "dpadmm/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dpadmm {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Value at an absolute counter position of the SplitMix64 sequence seeded
// at `key`.
std::uint64_t At(std::uint64_t key, std::uint64_t position) {
  std::uint64_t z = key + kGolden * (position + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t MixBits(std::uint64_t v) { return At(v, 0); }

std::uint64_t NoiseStream::NextUInt64() { return At(key_, position_++); }

std::uint64_t NoiseStream::NextBounded(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("NextBounded: bound must be > 0");
  }
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = NextUInt64();
  } while (v >= limit);
  return v % bound;
}

double NoiseStream::NextUniform() {
  return static_cast<double>(NextUInt64() >> 11) * 0x1.0p-53;
}

double NoiseStream::NextGaussian() {
  // u1 in (0, 1] so the log is finite; u2 in [0, 1).
  const double u1 = (static_cast<double>(NextUInt64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(NextUInt64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

NoiseStream NoiseSource::Stream(std::uint64_t step, StreamTag tag) const {
  std::uint64_t key = MixBits(seed_);
  key = MixBits(key ^ step);
  key = MixBits(key ^ static_cast<std::uint64_t>(tag));
  return NoiseStream(key);
}

Eigen::VectorXd GaussianVector(NoiseStream& stream, Eigen::Index dim, double sigma) {
  if (dim < 1) {
    throw std::invalid_argument("GaussianVector: dim must be >= 1");
  }
  if (sigma < 0.0) {
    throw std::invalid_argument("GaussianVector: sigma must be >= 0");
  }
  if (sigma == 0.0) return Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) out[i] = sigma * stream.NextGaussian();
  return out;
}

Eigen::VectorXd ClipL2(const Eigen::VectorXd& v, double clip_norm) {
  if (!(clip_norm > 0.0)) {
    throw std::invalid_argument("ClipL2: clip norm must be > 0");
  }
  const double norm = v.norm();
  if (norm <= clip_norm) return v;
  return v * (clip_norm / norm);
}

}  // namespace dpadmm
