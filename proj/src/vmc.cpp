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

#include "rbmtfi/vmc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "rbmtfi/errors.hpp"
#include "rbmtfi/io.hpp"
#include "rbmtfi/parallel.hpp"

namespace rbmtfi {

SamplerConfig SamplerConfig::defaults() {
  SamplerConfig cfg;
  cfg.n_chains = std::max(4, default_thread_count());
  return cfg;
}

void SamplerConfig::validate() const {
  if (n_sweeps < 1) throw ConfigurationError("n_sweeps must be positive");
  if (n_burnin < 0) throw ConfigurationError("n_burnin must be nonnegative");
  if (n_rethermalize < 0) throw ConfigurationError("n_rethermalize must be nonnegative");
  if (n_chains < 1) throw ConfigurationError("n_chains must be positive");
  if (n_threads < 0) throw ConfigurationError("n_threads must be nonnegative");
}

double local_energy(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                    const TfiParams& tfi) {
  double e = diagonal_energy(config);
  if (tfi.gamma == 0.0) return e;
  double flips = 0.0;
  for (int i = 0; i < config.size(); ++i) flips += psi_ratio(params, cache, config, i);
  return e - tfi.gamma * flips;
}

namespace {

SpinConfig random_config(int length, Rng& rng) {
  SpinConfig c(length);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < length; ++i) {
    if (coin(rng)) c.flip(i);
  }
  return c;
}

}  // namespace

VmcChain::VmcChain(const RbmParams& params, std::uint64_t seed)
    : config_(params.size()), cache_(params, config_), rng_(seed) {
  config_ = random_config(params.size(), rng_);
  cache_.recompute(params, config_);
}

VmcChain::VmcChain(const RbmParams& params, SpinConfig start, std::uint64_t seed)
    : config_(std::move(start)), cache_(params, config_), rng_(seed) {}

void VmcChain::rebind(const RbmParams& params) { cache_.recompute(params, config_); }

void metropolis_sweep(VmcChain& chain, const RbmParams& params) {
  const int n = chain.config_.size();
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int step = 0; step < n; ++step) {
    const int site = pick(chain.rng_);
    const double log_ratio = log_psi_ratio(params, chain.cache_, chain.config_, site);
    ++chain.proposed_;
    if (log_ratio >= 0.0 || uniform(chain.rng_) < std::exp(2.0 * log_ratio)) {
      ++chain.accepted_;
      chain.cache_.update(params, chain.config_, site);
      chain.config_.flip(site);
      if (chain.cache_.needs_refresh()) chain.cache_.recompute(params, chain.config_);
    }
  }
  if (uniform(chain.rng_) < 0.5) {
    chain.config_.flip_all();
    chain.cache_.negate();
  }
}

std::vector<VmcChain> make_chains(const RbmParams& params, const SamplerConfig& cfg) {
  cfg.validate();
  std::vector<VmcChain> chains;
  chains.reserve(static_cast<std::size_t>(cfg.n_chains));
  for (int c = 0; c < cfg.n_chains; ++c) {
    chains.emplace_back(params, derive_seed(cfg.seed, static_cast<std::uint64_t>(c)));
  }
  return chains;
}

namespace {

struct ChainAccumulator {
  std::vector<double> energies;
  Eigen::VectorXd o_sum;
  Eigen::MatrixXd oo_sum;
  Eigen::VectorXd eo_sum;
  double e2_sum = 0.0;
  long proposed = 0;
  long accepted = 0;
};

std::string describe(const SpinConfig& c) {
  std::ostringstream os;
  for (int i = 0; i < c.size(); ++i) os << (c[i] > 0 ? '+' : '-');
  return os.str();
}

}  // namespace

VmcEstimate estimate(const RbmParams& params, const TfiParams& tfi, const SamplerConfig& cfg) {
  auto chains = make_chains(params, cfg);
  return estimate(params, tfi, cfg, chains, cfg.n_burnin);
}

VmcEstimate estimate(const RbmParams& params, const TfiParams& tfi, const SamplerConfig& cfg,
                     std::vector<VmcChain>& chains, long burnin) {
  cfg.validate();
  const int n = params.size();
  const int n_chains = static_cast<int>(chains.size());
  if (n_chains == 0) throw ConfigurationError("estimate needs at least one chain");
  std::vector<ChainAccumulator> acc(static_cast<std::size_t>(n_chains));

  parallel_for(n_chains, cfg.n_threads, [&](int c) {
    auto& chain = chains[static_cast<std::size_t>(c)];
    auto& a = acc[static_cast<std::size_t>(c)];
    if (chain.config().size() != n) throw ConfigurationError("chain length mismatch");
    chain.rebind(params);
    for (long s = 0; s < burnin; ++s) metropolis_sweep(chain, params);

    a.energies.reserve(static_cast<std::size_t>(cfg.n_sweeps));
    // one row of log-derivatives per sample; the moments are formed in bulk
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(cfg.n_sweeps, n);
    const long proposed0 = chain.proposed(), accepted0 = chain.accepted();
    for (long s = 0; s < cfg.n_sweeps; ++s) {
      metropolis_sweep(chain, params);
      const double e = local_energy(params, chain.cache(), chain.config(), tfi);
      if (!std::isfinite(e)) {
        throw NumericalFault("non-finite local energy in chain " + std::to_string(c) +
                             " at sweep " + std::to_string(s) + ", config " +
                             describe(chain.config()));
      }
      log_derivatives(chain.cache(), chain.config(),
                      std::span<double>(rows.row(s).data(), static_cast<std::size_t>(n)));
      a.energies.push_back(e);
      a.e2_sum += e * e;
    }
    const Eigen::Map<const Eigen::VectorXd> energies(a.energies.data(), cfg.n_sweeps);
    a.o_sum = rows.colwise().sum().transpose();
    a.oo_sum = Eigen::MatrixXd::Zero(n, n);
    a.oo_sum.selfadjointView<Eigen::Lower>().rankUpdate(rows.transpose());
    a.eo_sum = rows.transpose() * energies;
    a.proposed = chain.proposed() - proposed0;
    a.accepted = chain.accepted() - accepted0;
  });

  VmcEstimate out;
  Eigen::VectorXd o_sum = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd oo_sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd eo_sum = Eigen::VectorXd::Zero(n);
  double e2_sum = 0.0;
  long total = 0, proposed = 0, accepted = 0;
  std::vector<std::vector<double>> series;
  series.reserve(acc.size());
  for (auto& a : acc) {
    o_sum += a.o_sum;
    oo_sum += a.oo_sum;
    eo_sum += a.eo_sum;
    e2_sum += a.e2_sum;
    total += static_cast<long>(a.energies.size());
    proposed += a.proposed;
    accepted += a.accepted;
    double chain_sum = 0.0;
    for (double e : a.energies) chain_sum += e;
    out.chain_means.push_back(chain_sum / static_cast<double>(a.energies.size()));
    out.chain_samples.push_back(static_cast<long>(a.energies.size()));
    series.push_back(std::move(a.energies));
  }
  const double inv = 1.0 / static_cast<double>(total);
  out.energy = binning_analysis(series);
  out.moments.energy = out.energy.mean;
  out.moments.o_mean = o_sum * inv;
  out.moments.oo_mean = oo_sum.selfadjointView<Eigen::Lower>();
  out.moments.oo_mean *= inv;
  out.moments.eo_mean = eo_sum * inv;
  out.eloc_variance = e2_sum * inv - out.energy.mean * out.energy.mean;
  out.acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
  return out;
}

}  // namespace rbmtfi
