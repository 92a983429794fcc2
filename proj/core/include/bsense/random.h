// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BSENSE_RANDOM_H_
#define BSENSE_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace bsense {

// Deterministic counter-free PRNG used everywhere in the simulator.
//
// Every consumer derives its own stream from (root seed, path of tags), so
// the draw sequence of one component never depends on whether another
// component ran. This is what makes "same config + same seed => identical
// trace bytes" hold, and what makes a disabled-adversary run byte-identical
// to a zero-Byzantine run.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so that small, correlated seeds decorrelate.
    NextU64();
    NextU64();
  }

  // Derives an independent stream from a root seed and a tag path, e.g.
  // {agent_id, round, kPurposeSense}.
  static Rng Derive(uint64_t root_seed, std::initializer_list<uint64_t> path) {
    uint64_t s = root_seed;
    for (uint64_t tag : path) {
      s = Mix(s ^ (tag + 0x9e3779b97f4a7c15ull));
    }
    return Rng(s);
  }

  uint64_t NextU64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return Mix(state_);
  }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double UniformIn(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Inclusive on both ends.
  int UniformInt(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(NextU64() % span);
  }

  // Standard normal via Box-Muller; spare value cached.
  double Gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_gaussian_;
    }
    double u1 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    const double u2 = Uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_gaussian_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // +1 or -1 with equal probability (SPSA perturbations).
  double RademacherSign() { return (NextU64() & 1u) ? 1.0 : -1.0; }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
  double spare_gaussian_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bsense

#endif  // BSENSE_RANDOM_H_
