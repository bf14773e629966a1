// Copyright 2026 The rbmtfi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbmtfi/io.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/spin_core.hpp"
#include "rbmtfi/stats.hpp"
#include "rbmtfi/vmc.hpp"

namespace rbmtfi {

/// Visible and hidden layers of the classical RBM spin system.
struct JointConfig {
  SpinConfig visible;
  SpinConfig hidden;

  JointConfig(SpinConfig v, SpinConfig h);
  int size() const { return visible.size(); }

  /// Visible spins from bits [0, L), hidden from bits [L, 2L).
  static JointConfig from_bits(std::uint64_t bits, int length);
};

class Temperature {
 public:
  explicit Temperature(double t);
  double value() const { return t_; }
  double beta() const { return 1.0 / t_; }

 private:
  double t_;
};

/// E(s, h) = -sum_{i,j} W_{i-j} s_i h_j.
double rbm_energy(const RbmParams& params, const JointConfig& joint);

enum class ThermalUpdate {
  kMetropolis,  ///< single-spin flips over all 2L spins
  kHeatBath,    ///< alternate exact conditional resampling of each layer
};

struct ThermalSample {
  McEstimate e;
  McEstimate e2;
  /// sum_i s_i and sum_j h_j; both vanish on average by global flip symmetry.
  McEstimate visible_magnetization;
  McEstimate hidden_magnetization;
  double acceptance_rate = 0.0;
};

/// Samples exp(-E/T). A sweep is 2L proposals at uniformly random spins of
/// either layer. SamplerConfig::n_rethermalize is not used.
ThermalSample thermal_sample(const RbmParams& params, const Temperature& temp,
                             const SamplerConfig& cfg,
                             ThermalUpdate update = ThermalUpdate::kMetropolis);

/// Raw per-sweep joint configurations (visible bits then hidden bits), for
/// distribution tests at small L.
std::vector<std::uint64_t> thermal_trajectory(const RbmParams& params, const Temperature& temp,
                                              long n_sweeps, long n_burnin, long thin,
                                              std::uint64_t seed);

/// (<E^2> - <E>^2) / n_sites with a jackknife error over bins.
McEstimate energy_variance(const McEstimate& e, const McEstimate& e2, int n_sites);

/// C = (<E^2> - <E>^2) / (T^2 n_sites) with a jackknife error over bins.
/// Throws StatisticalFault if the variance is negative by more than three
/// error bars.
McEstimate specific_heat(const McEstimate& e, const McEstimate& e2, const Temperature& temp,
                         int n_sites);

struct ThermoRow {
  double t = 0.0;
  double e_per_site = 0.0, e_err = 0.0;
  double var_per_site = 0.0, var_err = 0.0;
  double c_per_site = 0.0, c_err = 0.0;
  long n_sweeps = 0;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;
};

/// T from 0.2 to 4.0 in steps of 0.1 (T = 1 exactly on the grid).
std::vector<double> default_temperature_grid();

/// Runs thermal_sample at every grid temperature with per-point seeds derived
/// from cfg.seed. T = 1 is inserted if absent. Per-site quantities use 2L.
/// A failing grid point is reported in its row and the scan continues.
std::vector<ThermoRow> temperature_scan(const RbmParams& params, std::vector<double> t_grid,
                                        const SamplerConfig& cfg,
                                        ThermalUpdate update = ThermalUpdate::kMetropolis);

/// Columns gamma,L,T,e_per_site,e_err,var_per_site,var_err,c_per_site,c_err,n_sweeps,seed.
CsvTable thermo_csv(double gamma, int length, const std::vector<ThermoRow>& rows);

}  // namespace rbmtfi
