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

#include "rbmtfi/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rbmtfi/errors.hpp"
#include "rbmtfi/parallel.hpp"

namespace rbmtfi {

JointConfig::JointConfig(SpinConfig v, SpinConfig h) : visible(std::move(v)), hidden(std::move(h)) {
  if (visible.size() != hidden.size()) {
    throw ConfigurationError("visible and hidden layers must have equal length");
  }
}

JointConfig JointConfig::from_bits(std::uint64_t bits, int length) {
  if (length < 1 || 2 * length > 64) throw ConfigurationError("from_bits needs 2L <= 64");
  const std::uint64_t mask = (std::uint64_t{1} << length) - 1;
  return JointConfig(SpinConfig::from_bits(bits & mask, length),
                     SpinConfig::from_bits((bits >> length) & mask, length));
}

Temperature::Temperature(double t) : t_(t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw ConfigurationError("temperature must be positive");
}

double rbm_energy(const RbmParams& params, const JointConfig& joint) {
  if (params.size() != joint.size()) throw ConfigurationError("rbm_energy: length mismatch");
  const ThetaCache cache(params, joint.visible);
  double e = 0.0;
  for (int j = 0; j < joint.size(); ++j) e -= joint.hidden[j] * cache.theta()[static_cast<std::size_t>(j)];
  return e;
}

namespace {

// Metropolis/heat-bath chain for exp(-E/T) with both field caches:
//   theta_j = sum_i W_{i-j} s_i  (field on hidden j)
//   phi_i   = sum_j W_{i-j} h_j  (field on visible i)
class ThermalChain {
 public:
  ThermalChain(const RbmParams& params, std::uint64_t seed) : w_(params), rng_(seed) {
    const int n = params.size();
    std::bernoulli_distribution coin(0.5);
    s_.resize(static_cast<std::size_t>(n));
    h_.resize(static_cast<std::size_t>(n));
    for (auto& x : s_) x = coin(rng_) ? 1 : -1;
    for (auto& x : h_) x = coin(rng_) ? 1 : -1;
    refresh();
  }

  double energy() const { return energy_; }
  long proposed() const { return proposed_; }
  long accepted() const { return accepted_; }

  int visible_sum() const {
    int m = 0;
    for (int x : s_) m += x;
    return m;
  }
  int hidden_sum() const {
    int m = 0;
    for (int x : h_) m += x;
    return m;
  }

  std::uint64_t bits() const {
    const int n = size();
    std::uint64_t b = 0;
    for (int i = 0; i < n; ++i) {
      if (s_[static_cast<std::size_t>(i)] < 0) b |= std::uint64_t{1} << i;
      if (h_[static_cast<std::size_t>(i)] < 0) b |= std::uint64_t{1} << (i + n);
    }
    return b;
  }

  void metropolis_sweep(double beta) {
    const int n = size();
    std::uniform_int_distribution<int> pick(0, 2 * n - 1);
    for (int step = 0; step < 2 * n; ++step) {
      const int k = pick(rng_);
      ++proposed_;
      if (k < n) {
        const double de = 2.0 * s_[static_cast<std::size_t>(k)] * phi_[static_cast<std::size_t>(k)];
        if (accept(de, beta)) flip_visible(k, de);
      } else {
        const int j = k - n;
        const double de = 2.0 * h_[static_cast<std::size_t>(j)] * theta_[static_cast<std::size_t>(j)];
        if (accept(de, beta)) flip_hidden(j, de);
      }
    }
    if (accepted_since_refresh_ >= ThetaCache::kRefreshInterval) refresh();
  }

  // Hidden spins are conditionally independent given the visible layer and
  // vice versa: P(h_j = +1 | s) = 1 / (1 + exp(-2 beta theta_j)).
  void heat_bath_sweep(double beta) {
    const int n = size();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
      const double p_up = 1.0 / (1.0 + std::exp(-2.0 * beta * theta_[static_cast<std::size_t>(j)]));
      h_[static_cast<std::size_t>(j)] = uniform(rng_) < p_up ? 1 : -1;
    }
    refresh();
    for (int i = 0; i < n; ++i) {
      const double p_up = 1.0 / (1.0 + std::exp(-2.0 * beta * phi_[static_cast<std::size_t>(i)]));
      s_[static_cast<std::size_t>(i)] = uniform(rng_) < p_up ? 1 : -1;
    }
    refresh();
    proposed_ += 2 * n;
    accepted_ += 2 * n;
  }

 private:
  int size() const { return w_.size(); }

  bool accept(double de, double beta) {
    if (de <= 0.0) return true;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    return uniform(rng_) < std::exp(-beta * de);
  }

  void flip_visible(int i, double de) {
    const int n = size();
    const double two_s = 2.0 * s_[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      int d = i - j;
      if (d < 0) d += n;
      theta_[static_cast<std::size_t>(j)] -= two_s * w_[d];
    }
    s_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-s_[static_cast<std::size_t>(i)]);
    energy_ += de;
    ++accepted_;
    ++accepted_since_refresh_;
  }

  void flip_hidden(int j, double de) {
    const int n = size();
    const double two_h = 2.0 * h_[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      int d = i - j;
      if (d < 0) d += n;
      phi_[static_cast<std::size_t>(i)] -= two_h * w_[d];
    }
    h_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(-h_[static_cast<std::size_t>(j)]);
    energy_ += de;
    ++accepted_;
    ++accepted_since_refresh_;
  }

  void refresh() {
    const int n = size();
    theta_.assign(static_cast<std::size_t>(n), 0.0);
    phi_.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double w = w_[wrap_index(i - j, n)];
        theta_[static_cast<std::size_t>(j)] += w * s_[static_cast<std::size_t>(i)];
        phi_[static_cast<std::size_t>(i)] += w * h_[static_cast<std::size_t>(j)];
      }
    }
    energy_ = 0.0;
    for (int j = 0; j < n; ++j) energy_ -= h_[static_cast<std::size_t>(j)] * theta_[static_cast<std::size_t>(j)];
    accepted_since_refresh_ = 0;
  }

  const RbmParams& w_;
  Rng rng_;
  std::vector<std::int8_t> s_, h_;
  std::vector<double> theta_, phi_;
  double energy_ = 0.0;
  long proposed_ = 0, accepted_ = 0, accepted_since_refresh_ = 0;
};

}  // namespace

ThermalSample thermal_sample(const RbmParams& params, const Temperature& temp,
                             const SamplerConfig& cfg, ThermalUpdate update) {
  cfg.validate();
  const double beta = temp.beta();
  const auto n_chains = static_cast<std::size_t>(cfg.n_chains);
  std::vector<std::vector<double>> e(n_chains), e2(n_chains), mv(n_chains), mh(n_chains);
  std::vector<long> proposed(n_chains), accepted(n_chains);

  parallel_for(cfg.n_chains, cfg.n_threads, [&](int c) {
    const auto k = static_cast<std::size_t>(c);
    ThermalChain chain(params, derive_seed(cfg.seed, static_cast<std::uint64_t>(c)));
    auto sweep = [&] {
      if (update == ThermalUpdate::kMetropolis) {
        chain.metropolis_sweep(beta);
      } else {
        chain.heat_bath_sweep(beta);
      }
    };
    for (long s = 0; s < cfg.n_burnin; ++s) sweep();
    const long p0 = chain.proposed(), a0 = chain.accepted();
    for (auto* v : {&e[k], &e2[k], &mv[k], &mh[k]}) v->reserve(static_cast<std::size_t>(cfg.n_sweeps));
    for (long s = 0; s < cfg.n_sweeps; ++s) {
      sweep();
      const double x = chain.energy();
      if (!std::isfinite(x)) throw NumericalFault("non-finite RBM energy in thermal chain");
      e[k].push_back(x);
      e2[k].push_back(x * x);
      mv[k].push_back(chain.visible_sum());
      mh[k].push_back(chain.hidden_sum());
    }
    proposed[k] = chain.proposed() - p0;
    accepted[k] = chain.accepted() - a0;
  });

  ThermalSample out;
  out.e = binning_analysis(e);
  out.e2 = binning_analysis(e2);
  out.visible_magnetization = binning_analysis(mv);
  out.hidden_magnetization = binning_analysis(mh);
  long p = 0, a = 0;
  for (std::size_t k = 0; k < n_chains; ++k) {
    p += proposed[k];
    a += accepted[k];
  }
  out.acceptance_rate = p ? static_cast<double>(a) / static_cast<double>(p) : 0.0;
  return out;
}

std::vector<std::uint64_t> thermal_trajectory(const RbmParams& params, const Temperature& temp,
                                              long n_sweeps, long n_burnin, long thin,
                                              std::uint64_t seed) {
  if (2 * params.size() > 64) throw CapabilityError("thermal_trajectory needs 2L <= 64");
  if (thin < 1) throw ConfigurationError("thin must be positive");
  ThermalChain chain(params, seed);
  for (long s = 0; s < n_burnin; ++s) chain.metropolis_sweep(temp.beta());
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n_sweeps / thin + 1));
  for (long s = 0; s < n_sweeps; ++s) {
    chain.metropolis_sweep(temp.beta());
    if (s % thin == 0) out.push_back(chain.bits());
  }
  return out;
}

McEstimate energy_variance(const McEstimate& e, const McEstimate& e2, int n_sites) {
  if (n_sites < 1) throw ConfigurationError("n_sites must be positive");
  const double inv = 1.0 / n_sites;
  return jackknife(e, e2, [inv](double m1, double m2) { return (m2 - m1 * m1) * inv; });
}

McEstimate specific_heat(const McEstimate& e, const McEstimate& e2, const Temperature& temp,
                         int n_sites) {
  if (n_sites < 1) throw ConfigurationError("n_sites must be positive");
  const double scale = temp.beta() * temp.beta() / n_sites;
  auto c = jackknife(e, e2, [scale](double m1, double m2) { return (m2 - m1 * m1) * scale; });
  if (c.mean < 0.0 && -c.mean > 3.0 * c.error + 1e-12 * std::max(1.0, std::abs(e2.mean) * scale)) {
    throw StatisticalFault("negative energy variance " + format_real(c.mean) + " beyond error " +
                           format_real(c.error));
  }
  return c;
}

std::vector<double> default_temperature_grid() {
  std::vector<double> grid;
  for (int k = 2; k <= 40; ++k) grid.push_back(k / 10.0);
  return grid;
}

std::vector<ThermoRow> temperature_scan(const RbmParams& params, std::vector<double> t_grid,
                                        const SamplerConfig& cfg, ThermalUpdate update) {
  cfg.validate();
  if (t_grid.empty()) throw ConfigurationError("temperature grid is empty");
  for (double t : t_grid) Temperature{t};
  if (std::find(t_grid.begin(), t_grid.end(), 1.0) == t_grid.end()) t_grid.push_back(1.0);
  std::sort(t_grid.begin(), t_grid.end());

  const int n_sites = 2 * params.size();
  std::vector<ThermoRow> rows;
  rows.reserve(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    ThermoRow row;
    row.t = t_grid[k];
    row.n_sweeps = cfg.n_sweeps;
    row.seed = derive_seed(cfg.seed, k);
    try {
      SamplerConfig point = cfg;
      point.seed = row.seed;
      const Temperature temp(row.t);
      const auto sample = thermal_sample(params, temp, point, update);
      row.e_per_site = sample.e.mean / n_sites;
      row.e_err = sample.e.error / n_sites;
      const auto var = energy_variance(sample.e, sample.e2, n_sites);
      row.var_per_site = var.mean;
      row.var_err = var.error;
      const auto c = specific_heat(sample.e, sample.e2, temp, n_sites);
      row.c_per_site = c.mean;
      row.c_err = c.error;
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
      row.e_per_site = row.e_err = row.var_per_site = row.var_err = row.c_per_site = row.c_err =
          std::nan("");
    }
    rows.push_back(row);
  }
  return rows;
}

CsvTable thermo_csv(double gamma, int length, const std::vector<ThermoRow>& rows) {
  CsvTable t({"gamma", "L", "T", "e_per_site", "e_err", "var_per_site", "var_err", "c_per_site",
              "c_err", "n_sweeps", "seed"});
  for (const auto& r : rows) {
    t.add_row({cell(gamma), cell(length), cell(r.t), cell(r.e_per_site), cell(r.e_err),
               cell(r.var_per_site), cell(r.var_err), cell(r.c_per_site), cell(r.c_err),
               cell(static_cast<long long>(r.n_sweeps)), cell(r.seed)});
  }
  return t;
}

}  // namespace rbmtfi
