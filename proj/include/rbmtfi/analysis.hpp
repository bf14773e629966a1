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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbmtfi/io.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/sr.hpp"
#include "rbmtfi/vmc.hpp"

namespace rbmtfi {

struct AlignedParams {
  RbmParams aligned;
  int origin_index = 0;
  /// True if the global sign flip W -> -W was applied.
  bool gauge_flipped = false;
};

/// Rotates W so that the largest |W_d| sits at d = 0 (ties: smallest index),
/// then applies W -> -W if needed so that W_0 > 0. Psi is unchanged.
AlignedParams align_origin(const RbmParams& params);

/// Inclusive separation window [ceil(7L/16), floor(9L/16)], i.e.
/// L/2 - L/16 <= d <= L/2 + L/16.
std::pair<int, int> tail_window(int length);

/// Mean of the aligned couplings over tail_window(L).
double w_tail(const RbmParams& aligned);

struct TailReport {
  double gamma = 0.0;
  int length = 0;
  std::vector<double> w_profile;
  double w_tail = 0.0;
  double w_tail_times_l = 0.0;
  int origin_index = 0;
};

TailReport tail_report(const RbmParams& params, double gamma);

struct ScanPoint {
  double gamma = 0.0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::optional<RbmParams> params;
  OptTrace trace;
  TailReport tail;
  double energy = 0.0;
  double energy_err = 0.0;
  double exact_energy = 0.0;
  double rel_error = 0.0;
};

using ScanProgress = std::function<void(const ScanPoint&)>;

/// Final energy of optimized parameters, from a fresh sampling run.
McEstimate evaluate_energy(const RbmParams& params, const TfiParams& tfi,
                           const SamplerConfig& sampler);

/// For each gamma: optimize, evaluate the energy against the exact oracle,
/// align and extract the tail. Grid point k runs scan_point with seed
/// derive_seed(master_seed, k); the seed fields of `sr` and `sampler` are
/// ignored. Failures are recorded in the point and the scan continues.
std::vector<ScanPoint> gamma_scan(const std::vector<double>& gammas, int length,
                                  const SrConfig& sr, const SamplerConfig& sampler,
                                  std::uint64_t master_seed, const ScanProgress& progress = {});

/// One scan point. Initialization, optimization sampling and the final energy
/// evaluation use streams 0, 1 and 2 derived from `seed`.
ScanPoint scan_point(double gamma, int length, SrConfig sr, SamplerConfig sampler,
                     std::uint64_t seed);

/// Columns gamma,L,w_tail,w_tail_L,origin_index,energy,energy_err,exact_energy,rel_error,seed.
CsvTable tail_csv(const std::vector<ScanPoint>& points, int length);

/// Columns d,W_d.
CsvTable profile_csv(const TailReport& report);

/// Columns gamma,L,energy,energy_err,exact_energy,rel_error,seed.
CsvTable energy_csv(const std::vector<ScanPoint>& points, int length);

}  // namespace rbmtfi
