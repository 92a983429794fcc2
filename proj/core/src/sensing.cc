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

#include "bsense/sensing.h"

#include <cmath>
#include <limits>
#include <string>

namespace bsense {
namespace {

constexpr double kPi = 3.14159265358979323846;

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("SensingParams.") + name +
                                " must be strictly positive and finite");
  }
}

}  // namespace

void SensingParams::Validate() const {
  RequirePositive(kappa1, "kappa1");
  RequirePositive(kappa2, "kappa2");
  RequirePositive(kappa3, "kappa3");
  RequirePositive(kappa4, "kappa4");
  RequirePositive(n_rx, "n_rx");
  RequirePositive(n0, "n0");
  RequirePositive(b_a, "b_a");
  RequirePositive(kappa5, "kappa5");
  RequirePositive(kappa6, "kappa6");
  RequirePositive(g_a, "g_a");
  RequirePositive(p_elec, "p_elec");
  RequirePositive(e_t, "e_t");
  RequirePositive(r_s, "r_s");
  RequirePositive(tau_tot, "tau_tot");
  RequirePositive(sigma_n2, "sigma_n2");
  RequirePositive(snr_linear, "snr_linear");
}

double QFunction(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("QFunction: input must be finite");
  }
  return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double TransmissionTime(const SensingParams& p) {
  p.Validate();
  const double path_loss =
      std::pow(4.0 * kPi / p.kappa5, p.kappa3) * std::pow(10.0, p.kappa3);
  const double tx_power = p.kappa4 * p.n0 * p.n_rx * p.b_a * path_loss *
                          std::pow(p.r_s, p.kappa3) / (p.g_a * p.kappa6);
  return p.e_t / (tx_power + p.p_elec);
}

double SensingTime(const SensingParams& p) {
  const double tau_t = TransmissionTime(p);
  if (tau_t >= p.tau_tot) {
    throw InfeasibleFrameError(
        "transmission time " + std::to_string(tau_t) +
        " s consumes the whole frame of " + std::to_string(p.tau_tot) + " s");
  }
  return p.tau_tot - tau_t;
}

double FalseAlarmProb(const SensingParams& p, double threshold, double tau_s) {
  if (!(tau_s > 0.0)) {
    throw std::domain_error("FalseAlarmProb: tau_s must be positive");
  }
  const double mean = 2.0 * tau_s * p.b_a * p.sigma_n2;
  const double std_dev = std::sqrt(4.0 * tau_s * p.b_a) * p.sigma_n2;
  const double weight = p.kappa2 / (p.kappa1 + p.kappa2);
  return weight * QFunction((threshold - mean) / std_dev);
}

double MissDetectProb(const SensingParams& p, double threshold, double tau_s) {
  if (!(tau_s > 0.0)) {
    throw std::domain_error("MissDetectProb: tau_s must be positive");
  }
  const double occupied_power = p.sigma_n2 * (1.0 + p.snr_linear);
  const double mean = 2.0 * tau_s * p.b_a * occupied_power;
  const double std_dev = std::sqrt(4.0 * tau_s * p.b_a) * occupied_power;
  const double weight = p.kappa1 / (p.kappa1 + p.kappa2);
  return weight * (1.0 - QFunction((threshold - mean) / std_dev));
}

DetectionOutcome TotalError(const SensingParams& p, double threshold,
                            double tau_s) {
  DetectionOutcome out;
  out.threshold = threshold;
  out.tau_s = tau_s;
  out.tau_t = TransmissionTime(p);
  out.p_fa = FalseAlarmProb(p, threshold, tau_s);
  out.p_md = MissDetectProb(p, threshold, tau_s);
  out.p_e = out.p_fa + out.p_md;

  const double idle_mean = 2.0 * tau_s * p.b_a * p.sigma_n2;
  const double idle_std = std::sqrt(4.0 * tau_s * p.b_a) * p.sigma_n2;
  const double occupied_power = p.sigma_n2 * (1.0 + p.snr_linear);
  const double busy_mean = 2.0 * tau_s * p.b_a * occupied_power;
  const double busy_std = std::sqrt(4.0 * tau_s * p.b_a) * occupied_power;
  out.p_fa_cond = QFunction((threshold - idle_mean) / idle_std);
  out.p_d_cond = QFunction((threshold - busy_mean) / busy_std);
  return out;
}

double ThresholdFromNormalized(const SensingParams& p, double tau_s,
                               double threshold_norm) {
  return threshold_norm * 2.0 * tau_s * p.b_a * p.sigma_n2;
}

std::vector<ThresholdSweepPoint> SweepThreshold(const SensingParams& p,
                                                double tau_s, double norm_lo,
                                                double norm_hi, int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("SweepThreshold: need at least 2 points");
  }
  std::vector<ThresholdSweepPoint> sweep;
  sweep.reserve(n_points);
  const double step = (norm_hi - norm_lo) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double norm = norm_lo + step * i;
    const double threshold = ThresholdFromNormalized(p, tau_s, norm);
    ThresholdSweepPoint pt;
    pt.threshold_norm = norm;
    pt.threshold = threshold;
    pt.p_fa = FalseAlarmProb(p, threshold, tau_s);
    pt.p_md = MissDetectProb(p, threshold, tau_s);
    pt.p_e = pt.p_fa + pt.p_md;
    sweep.push_back(pt);
  }
  return sweep;
}

double OptimalThreshold(const SensingParams& p, double tau_s, double norm_lo,
                        double norm_hi, int n_points) {
  const auto sweep = SweepThreshold(p, tau_s, norm_lo, norm_hi, n_points);
  double best_threshold = sweep.front().threshold;
  double best_pe = std::numeric_limits<double>::infinity();
  for (const auto& pt : sweep) {
    if (pt.p_e < best_pe) {
      best_pe = pt.p_e;
      best_threshold = pt.threshold;
    }
  }
  return best_threshold;
}

double ByzantineSnr(double beta) { return 10.0 * beta; }

}  // namespace bsense
