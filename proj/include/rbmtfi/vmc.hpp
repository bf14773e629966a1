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
#include <random>
#include <vector>

#include "rbmtfi/moments.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/spin_core.hpp"
#include "rbmtfi/stats.hpp"

namespace rbmtfi {

using Rng = std::mt19937_64;

struct SamplerConfig {
  long n_sweeps = 2000;
  long n_burnin = 500;
  /// Sweeps discarded when persistent chains resume after a parameter update.
  long n_rethermalize = 50;
  int n_chains = 4;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks default_thread_count().
  int n_threads = 0;

  /// Defaults with n_chains = max(4, available workers).
  static SamplerConfig defaults();
  void validate() const;
};

/// E_loc(s) = -sum_i s_i s_{i+1} - gamma sum_i Psi(s^i)/Psi(s).
double local_energy(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                    const TfiParams& tfi);

/// One Metropolis chain sampling Psi(s)^2. Owns its configuration, theta cache
/// and random stream.
class VmcChain {
 public:
  VmcChain(const RbmParams& params, std::uint64_t seed);
  VmcChain(const RbmParams& params, SpinConfig start, std::uint64_t seed);

  const SpinConfig& config() const { return config_; }
  const ThetaCache& cache() const { return cache_; }
  Rng& rng() { return rng_; }

  /// Rebuilds the cache for new parameters, keeping the configuration.
  void rebind(const RbmParams& params);

  long proposed() const { return proposed_; }
  long accepted() const { return accepted_; }
  double acceptance_rate() const {
    return proposed_ ? static_cast<double>(accepted_) / static_cast<double>(proposed_) : 0.0;
  }

 private:
  friend void metropolis_sweep(VmcChain& chain, const RbmParams& params);

  SpinConfig config_;
  ThetaCache cache_;
  Rng rng_;
  long proposed_ = 0;
  long accepted_ = 0;
};

/// L single-flip proposals at uniform random sites, each accepted with
/// probability min(1, ratio^2), followed by a global spin flip with
/// probability 1/2 (Psi^2 is invariant under it).
void metropolis_sweep(VmcChain& chain, const RbmParams& params);

struct VmcEstimate {
  McEstimate energy;
  SrMoments moments;
  double eloc_variance = 0.0;
  double acceptance_rate = 0.0;
  /// Per-chain mean energies and sample counts.
  std::vector<double> chain_means;
  std::vector<long> chain_samples;
};

/// Fresh chains from random configurations: n_burnin sweeps discarded, then
/// n_sweeps measured per chain.
VmcEstimate estimate(const RbmParams& params, const TfiParams& tfi, const SamplerConfig& cfg);

/// Continues existing chains (one per entry), discarding `burnin` sweeps first.
VmcEstimate estimate(const RbmParams& params, const TfiParams& tfi, const SamplerConfig& cfg,
                     std::vector<VmcChain>& chains, long burnin);

std::vector<VmcChain> make_chains(const RbmParams& params, const SamplerConfig& cfg);

}  // namespace rbmtfi
