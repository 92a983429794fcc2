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

#ifndef BSENSE_BELIEF_H_
#define BSENSE_BELIEF_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsense {

class DegenerateEvidenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HypothesisSpace {
  int size = 2;
  int true_index = 1;
  std::vector<std::string> labels;

  void Validate() const {
    if (size < 2) throw std::invalid_argument("HypothesisSpace: size >= 2");
    if (true_index < 0 || true_index >= size) {
      throw std::invalid_argument("HypothesisSpace: true_index out of range");
    }
  }
};

// Probability vector over the hypothesis set. Construction renormalizes, so
// an instance is always on the simplex (entries >= 0, unit sum).
class Belief {
 public:
  explicit Belief(std::vector<double> probs);

  static Belief Uniform(int n);
  static Belief PointMass(int n, int index);

  const std::vector<double>& probs() const { return probs_; }
  double operator[](int i) const { return probs_[i]; }
  int size() const { return static_cast<int>(probs_.size()); }
  int ArgMax() const;

  // L1 distance; total variation is half of this.
  double L1DistanceTo(const Belief& other) const;

 private:
  std::vector<double> probs_;
};

// likelihood[s][theta] = l(s | theta). For every theta the column over s sums
// to one. prior_s0 is the distribution of the initial symbol s0.
struct ObservationModel {
  std::vector<std::vector<double>> likelihood;
  std::vector<double> prior_s0;

  int num_symbols() const { return static_cast<int>(likelihood.size()); }
  int num_hypotheses() const {
    return likelihood.empty() ? 0 : static_cast<int>(likelihood[0].size());
  }
  void Validate() const;

  // Two-symbol model of one hard energy-detection decision: symbol 1 is
  // "energy above threshold". p_fa_cond / p_d_cond are the conditional
  // decide-busy probabilities under the idle (index 0) and busy (index 1)
  // hypotheses.
  static ObservationModel BinaryDetection(double p_fa_cond, double p_d_cond);
};

// Posterior ~ l(s | theta) * prior(theta). Throws DegenerateEvidenceError if
// the unnormalized posterior is identically zero.
Belief BayesUpdate(const Belief& prior, const ObservationModel& model,
                   int symbol);

// l(theta) = sum_{s0} l(s0) * l(theta | s0): mixture of the per-s0
// conditionals under the initial-symbol prior.
Belief MarginalBelief(const ObservationModel& model,
                      const std::vector<Belief>& conditionals);

// Discrete-time gradient cur - prev; components sum to zero.
std::vector<double> BeliefGradient(const Belief& prev, const Belief& cur);

// --- Iterative estimator of beta = d l(theta|s0) / d l(theta) -------------
//
// The derivative is read as a finite difference across consecutive history
// entries, evaluated at the hypothesis minimizing the alternating
// fixed-numerator / fixed-denominator objective. The loop stops when two
// successive ratio readings agree within tol_phi.

struct DogLegConfig {
  double tol_phi = 1e-4;   // per-iteration tolerance phi
  double beta_min = 0.1;
  double beta_max = 5.0;
  double eps_den = 1e-9;   // denominator-change floor
  int max_iters = 100;
  double accuracy_rho = 1e-2;  // ADMM accuracy coefficient (complexity model)
};

struct BetaEstimate {
  double beta = 1.0;
  bool degenerate_denominator = false;
  bool converged = false;
  int iterations = 0;      // alternating sweeps consumed
  int theta_hat = 0;       // argmin hypothesis at the final sweep
};

// history[k] = (l_k(.|s0), l_k(.)): the conditional and marginal belief at
// iteration k. Needs at least two entries.
BetaEstimate DogLegBeta(const std::vector<std::pair<Belief, Belief>>& history,
                        const DogLegConfig& cfg);

}  // namespace bsense

#endif  // BSENSE_BELIEF_H_
