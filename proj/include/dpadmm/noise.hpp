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

#ifndef DPADMM_NOISE_HPP_
#define DPADMM_NOISE_HPP_

#include <cstdint>

#include <Eigen/Core>

namespace dpadmm {

// Role of a randomness stream. Each (seed, step, tag) triple keys an
// independent stream, so e.g. batch sampling never shares draws with the
// gradient noise of the same iteration.
enum class StreamTag : std::uint64_t {
  kBatchSampling = 1,
  kGradientNoise = 2,
  kModelNoiseX = 3,
  kModelNoiseY = 4,
  kModelNoiseZ = 5,
  kSyntheticRow = 6,
  kFoldShuffle = 7,
  kLabelFlip = 8,
};

// Counter-based random stream: draw i is a pure function of (key, i), so a
// stream can be replayed from any position and streams with distinct keys
// never overlap.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t key) : key_(key), position_(0) {}

  std::uint64_t NextUInt64();
  // Unbiased draw from {0, ..., bound-1} via rejection.
  std::uint64_t NextBounded(std::uint64_t bound);
  // Uniform in [0, 1).
  double NextUniform();
  // Standard normal via Box-Muller; consumes exactly two counter positions.
  double NextGaussian();

  std::uint64_t position() const { return position_; }

 private:
  std::uint64_t key_;
  std::uint64_t position_;
};

// Splittable source of reproducible randomness for one run. Streams derived
// from the same (seed, step, tag) are identical; the source itself holds no
// mutable state and may be shared across threads (each thread derives its
// own streams).
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : seed_(seed) {}

  NoiseStream Stream(std::uint64_t step, StreamTag tag) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Vector of iid N(0, sigma^2) entries. sigma == 0 yields the zero vector.
Eigen::VectorXd GaussianVector(NoiseStream& stream, Eigen::Index dim, double sigma);

// v scaled by min(1, clip_norm / ||v||_2). Direction preserved; the zero
// vector is returned unchanged.
Eigen::VectorXd ClipL2(const Eigen::VectorXd& v, double clip_norm);

// Mixes a 64-bit value through the SplitMix64 finalizer. Exposed for key
// derivation elsewhere (per-run seeds in sweeps).
std::uint64_t MixBits(std::uint64_t v);

}  // namespace dpadmm

#endif  // DPADMM_NOISE_HPP_
