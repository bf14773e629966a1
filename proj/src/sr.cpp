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

#include "rbmtfi/sr.hpp"

#include <cmath>
#include <random>
#include <string>

#include "rbmtfi/errors.hpp"

namespace rbmtfi {

void SrConfig::validate() const {
  if (!(eta > 0.0)) throw ConfigurationError("eta must be positive");
  if (!(lambda_abs >= 0.0) || !(lambda_rel >= 0.0)) {
    throw ConfigurationError("diagonal shifts must be nonnegative");
  }
  if (n_iters < 1) throw ConfigurationError("n_iters must be at least 1");
  if (!(init_scale > 0.0)) throw ConfigurationError("init_scale must be positive");
  if (snapshot_every < 0) throw ConfigurationError("snapshot_every must be nonnegative");
  if (!(max_step >= 0.0)) throw ConfigurationError("max_step must be nonnegative");
}

CsvTable OptTrace::csv() const {
  CsvTable t({"iter", "energy", "energy_err", "eloc_var", "delta_w_norm"});
  for (const auto& r : records) {
    t.add_row({cell(r.iter), cell(r.energy), cell(r.energy_err), cell(r.eloc_var),
               cell(r.delta_w_norm)});
  }
  return t;
}

Eigen::VectorXd sr_solve(const Eigen::MatrixXd& s, const Eigen::VectorXd& f, const SrConfig& cfg) {
  const auto n = s.rows();
  if (s.cols() != n || f.size() != n) throw ConfigurationError("sr_solve: dimension mismatch");
  if (!s.allFinite() || !f.allFinite()) throw OptimizationFault("SR inputs are not finite");

  Eigen::MatrixXd reg = s;
  reg.diagonal() += cfg.lambda_rel * s.diagonal() + Eigen::VectorXd::Constant(n, cfg.lambda_abs);
  const Eigen::LLT<Eigen::MatrixXd> llt(reg);
  if (llt.info() != Eigen::Success) {
    throw OptimizationFault("regularized S matrix is not positive definite");
  }
  Eigen::VectorXd x = llt.solve(f);
  if (!x.allFinite()) throw OptimizationFault("SR solve produced non-finite values");
  return -cfg.eta * x;
}

Eigen::VectorXd sr_update(const SrMoments& moments, const SrConfig& cfg) {
  return sr_solve(moments.covariance(), moments.force(), cfg);
}

Eigen::VectorXd sr_step(const SrMoments& moments, const SrConfig& cfg) {
  Eigen::VectorXd delta = sr_update(moments, cfg);
  // near W = 0 the metric vanishes quadratically and the raw step diverges
  const double norm = delta.norm();
  if (cfg.max_step > 0.0 && norm > cfg.max_step) delta *= cfg.max_step / norm;
  return delta;
}

RbmParams random_params(int length, double init_scale, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> dist(-init_scale, init_scale);
  std::vector<double> w(static_cast<std::size_t>(length));
  for (auto& x : w) x = dist(rng);
  return RbmParams(std::move(w));
}

RbmParams apply_update(const RbmParams& params, const Eigen::VectorXd& delta) {
  if (delta.size() != params.size()) throw ConfigurationError("update length mismatch");
  std::vector<double> w(params.weights().begin(), params.weights().end());
  for (int d = 0; d < params.size(); ++d) w[static_cast<std::size_t>(d)] += delta(d);
  return RbmParams(std::move(w));
}

OptResult optimize(int length, const TfiParams& tfi, const SrConfig& sr,
                   const SamplerConfig& sampler, const OptProgress& progress) {
  sr.validate();
  return optimize_from(random_params(length, sr.init_scale, sr.seed), tfi, sr, sampler, progress);
}

OptResult optimize_from(RbmParams start, const TfiParams& tfi, const SrConfig& sr,
                        const SamplerConfig& sampler, const OptProgress& progress) {
  sr.validate();
  sampler.validate();
  OptResult result{std::move(start), {}};
  auto chains = make_chains(result.params, sampler);
  result.trace.records.reserve(static_cast<std::size_t>(sr.n_iters));

  for (int it = 0; it < sr.n_iters; ++it) {
    const long burnin = it == 0 ? sampler.n_burnin : sampler.n_rethermalize;
    Eigen::VectorXd delta;
    VmcEstimate est;
    try {
      est = estimate(result.params, tfi, sampler, chains, burnin);
      delta = sr_step(est.moments, sr);
    } catch (const Error& e) {
      throw OptimizationFault("iteration " + std::to_string(it) + ": " + e.what());
    }
    OptRecord rec{it, est.energy.mean, est.energy.error, est.eloc_variance, delta.norm()};
    result.trace.records.push_back(rec);
    if (progress) progress(rec);
    if (sr.snapshot_every > 0 && it % sr.snapshot_every == 0) {
      result.trace.snapshots.emplace_back(it, result.params);
    }
    result.params = apply_update(result.params, delta);
  }
  return result;
}

}  // namespace rbmtfi
