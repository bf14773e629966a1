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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rbmtfi/io.hpp"
#include "rbmtfi/moments.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/vmc.hpp"

namespace rbmtfi {

struct SrConfig {
  double eta = 0.05;
  double lambda_abs = 1e-6;
  double lambda_rel = 1e-3;
  int n_iters = 1000;
  double init_scale = 0.01;
  std::uint64_t seed = 1;
  /// Store a parameter snapshot every this many iterations; 0 disables.
  int snapshot_every = 0;
  /// Upper bound on the Euclidean norm of one applied update; longer steps
  /// are rescaled onto it. 0 disables the bound.
  double max_step = 0.1;

  void validate() const;
};

struct OptRecord {
  int iter = 0;
  double energy = 0.0;
  double energy_err = 0.0;
  double eloc_var = 0.0;
  double delta_w_norm = 0.0;
};

struct OptTrace {
  std::vector<OptRecord> records;
  std::vector<std::pair<int, RbmParams>> snapshots;

  /// Columns iter,energy,energy_err,eloc_var,delta_w_norm.
  CsvTable csv() const;
};

/// Solves (S + lambda_rel diag(S) + lambda_abs I) x = F by Cholesky and
/// returns -eta x.
Eigen::VectorXd sr_solve(const Eigen::MatrixXd& s, const Eigen::VectorXd& f, const SrConfig& cfg);

/// sr_solve with S and F assembled from raw moments.
Eigen::VectorXd sr_update(const SrMoments& moments, const SrConfig& cfg);

/// sr_update rescaled so that its norm is at most cfg.max_step (when
/// max_step > 0). This is the step optimize applies.
Eigen::VectorXd sr_step(const SrMoments& moments, const SrConfig& cfg);

/// W_d i.i.d. uniform in [-init_scale, init_scale].
RbmParams random_params(int length, double init_scale, std::uint64_t seed);

RbmParams apply_update(const RbmParams& params, const Eigen::VectorXd& delta);

struct OptResult {
  RbmParams params;
  OptTrace trace;
};

using OptProgress = std::function<void(const OptRecord&)>;

/// Sampling estimate -> SR step -> apply, n_iters times. Chains persist across
/// iterations: the first estimate discards n_burnin sweeps, later ones
/// n_rethermalize.
OptResult optimize(int length, const TfiParams& tfi, const SrConfig& sr,
                   const SamplerConfig& sampler, const OptProgress& progress = {});

/// Same loop from given starting parameters.
OptResult optimize_from(RbmParams start, const TfiParams& tfi, const SrConfig& sr,
                        const SamplerConfig& sampler, const OptProgress& progress = {});

}  // namespace rbmtfi
