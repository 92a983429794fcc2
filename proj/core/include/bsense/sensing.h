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

#ifndef BSENSE_SENSING_H_
#define BSENSE_SENSING_H_

#include <stdexcept>
#include <vector>

namespace bsense {

// Raised when the transmission time consumes the whole frame and no sensing
// time is left.
class InfeasibleFrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Physical-layer constants of the energy-detection model. Defaults follow the
// canonical simulation parameter set; every field is config-overridable.
//
// The channel occupancy alternates with birth rate kappa1 and death rate
// kappa2, so the prior weights of the busy/idle hypotheses are
// kappa1/(kappa1+kappa2) and kappa2/(kappa1+kappa2).
struct SensingParams {
  double kappa1 = 3.0;       // PU birth rate (1/s)
  double kappa2 = 3.0;       // PU death rate (1/s)
  double kappa3 = 3.0;       // path-loss exponent
  double kappa4 = 20.0;      // reference SU SNR (dB)
  double n_rx = 12.589;      // receiver noise figure
  double n0 = 417e-23;       // thermal noise (W/Hz)
  double b_a = 10e3;         // bandwidth (Hz)
  double kappa5 = 0.125;     // signal wavelength (m)
  double kappa6 = 0.2;       // amplifier efficiency
  double g_a = 0.01;         // antenna gain
  double p_elec = 3.63e-3;   // TX circuit power (W)
  double e_t = 1e-3;         // transmission energy budget (J)
  double r_s = 100.0;        // transmission range (m)
  double tau_tot = 1.0;      // total frame time (s)
  double sigma_n2 = 1.0;     // noise power (W), normalized
  double snr_linear = 10.0;  // sigma_p^2 / sigma_n^2, linear ratio

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// Closed-form error probabilities of one sensing frame. p_fa and p_md carry
// the channel-occupancy prior weights, so p_e = p_fa + p_md is the total
// error and lives in [0, 1]. p_fa_cond / p_d_cond are the conditional
// decide-busy probabilities under idle resp. busy, used for drawing
// per-round observations.
struct DetectionOutcome {
  double p_fa = 0.0;
  double p_md = 0.0;
  double p_e = 0.0;
  double p_fa_cond = 0.0;
  double p_d_cond = 0.0;
  double tau_s = 0.0;
  double tau_t = 0.0;
  double threshold = 0.0;
};

struct ThresholdSweepPoint {
  double threshold_norm = 0.0;  // in units of 2*tau_s*B_a*sigma_n^2
  double threshold = 0.0;
  double p_fa = 0.0;
  double p_md = 0.0;
  double p_e = 0.0;
};

// Gaussian upper-tail probability Q(x) = erfc(x / sqrt(2)) / 2.
// Throws std::domain_error on non-finite input.
double QFunction(double x);

// tau_t = E_t / (kappa4 N0 Nrx Ba (4 pi / kappa5)^kappa3 10^kappa3 r_s^kappa3
//                / (Ga kappa6) + P_elec).
// Strictly decreasing in r_s; tends to E_t / P_elec as r_s -> 0.
double TransmissionTime(const SensingParams& p);

// tau_s = tau_tot - tau_t. Throws InfeasibleFrameError when tau_t >= tau_tot.
double SensingTime(const SensingParams& p);

// Prior-weighted false alarm: kappa2/(kappa1+kappa2) *
//   Q((threshold - 2 tau_s Ba sn2) / sqrt(4 tau_s Ba sn2^2)).
double FalseAlarmProb(const SensingParams& p, double threshold, double tau_s);

// Prior-weighted miss detection: kappa1/(kappa1+kappa2) *
//   (1 - Q((threshold - 2 tau_s Ba (sp2+sn2)) / sqrt(4 tau_s Ba (sp2+sn2)^2))).
double MissDetectProb(const SensingParams& p, double threshold, double tau_s);

DetectionOutcome TotalError(const SensingParams& p, double threshold,
                            double tau_s);

// Converts a scale-free threshold (multiples of the idle-channel mean energy
// 2 tau_s Ba sigma_n^2) into an absolute one.
double ThresholdFromNormalized(const SensingParams& p, double tau_s,
                               double threshold_norm);

// Dense scan of the total error over normalized thresholds in
// [norm_lo, norm_hi]; used to locate the interior minimizer of p_e.
std::vector<ThresholdSweepPoint> SweepThreshold(const SensingParams& p,
                                                double tau_s, double norm_lo,
                                                double norm_hi, int n_points);

// Absolute threshold minimizing p_e over the given normalized sweep range.
double OptimalThreshold(const SensingParams& p, double tau_s, double norm_lo,
                        double norm_hi, int n_points);

// SNR-inflation rule: Byzantine agents sense the primary at the linear ratio
// 10*beta while honest agents see 10. beta is clamped upstream.
double ByzantineSnr(double beta);
inline double HonestSnr() { return 10.0; }

}  // namespace bsense

#endif  // BSENSE_SENSING_H_
