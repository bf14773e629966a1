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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "rbmtfi/errors.hpp"
#include "rbmtfi/exact.hpp"
#include "rbmtfi/sr.hpp"

using namespace rbmtfi;

namespace {

SamplerConfig sampler(std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.n_sweeps = 2000;
  cfg.n_burnin = 500;
  cfg.n_chains = 4;
  cfg.seed = seed;
  cfg.n_threads = 1;
  return cfg;
}

SrConfig sr_config(int iters, std::uint64_t seed) {
  SrConfig sr;
  sr.n_iters = iters;
  sr.seed = seed;
  return sr;
}

double rel_error(double e, double exact) { return std::abs((e - exact) / exact); }

}  // namespace

TEST_CASE("zero force gives a zero step") {
  SrMoments m;
  m.energy = -3.0;
  m.o_mean = Eigen::VectorXd::Constant(5, 0.2);
  m.oo_mean = Eigen::MatrixXd::Identity(5, 5) + m.o_mean * m.o_mean.transpose();
  m.eo_mean = m.energy * m.o_mean;
  const auto delta = sr_update(m, SrConfig{});
  CHECK(delta.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("identity metric reduces to the plain gradient") {
  SrConfig cfg;
  cfg.eta = 0.03;
  cfg.lambda_abs = 0.0;
  cfg.lambda_rel = 0.0;
  const Eigen::VectorXd f = Eigen::VectorXd::LinSpaced(6, -1.0, 2.5);
  const auto delta = sr_solve(Eigen::MatrixXd::Identity(6, 6), f, cfg);
  CHECK((delta + cfg.eta * f).norm() < 1e-15);
}

TEST_CASE("regularization shifts the diagonal") {
  SrConfig cfg;
  cfg.eta = 1.0;
  cfg.lambda_rel = 0.5;
  cfg.lambda_abs = 0.25;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2, 2);
  s(0, 0) = 2.0;
  s(1, 1) = 4.0;
  const auto delta = sr_solve(s, Eigen::Vector2d(1.0, 1.0), cfg);
  CHECK(delta(0) == doctest::Approx(-1.0 / 3.25));
  CHECK(delta(1) == doctest::Approx(-1.0 / 6.25));
}

TEST_CASE("zero couplings are a valid start thanks to the absolute shift") {
  const auto ex = exact_expectations(RbmParams::zeros(6), TfiParams(1.0));
  CHECK(ex.s_matrix.norm() < 1e-12);
  const auto delta = sr_update(ex.moments, SrConfig{});
  CHECK(delta.allFinite());
}

TEST_CASE("singular or non-finite inputs raise an optimization fault") {
  SrConfig cfg;
  cfg.lambda_abs = 0.0;
  cfg.lambda_rel = 0.0;
  CHECK_THROWS_AS(sr_solve(Eigen::MatrixXd::Zero(3, 3), Eigen::VectorXd::Ones(3), cfg),
                  OptimizationFault);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(3, 3);
  s(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sr_solve(s, Eigen::VectorXd::Ones(3), SrConfig{}), OptimizationFault);
  Eigen::MatrixXd indefinite = Eigen::MatrixXd::Identity(3, 3);
  indefinite(2, 2) = -1.0;
  CHECK_THROWS_AS(sr_solve(indefinite, Eigen::VectorXd::Ones(3), SrConfig{}), OptimizationFault);
}

TEST_CASE("one small exact step lowers the energy") {
  SrConfig cfg;
  cfg.eta = 0.01;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = random_params(8, 0.3, seed);
    const auto before = exact_expectations(p, TfiParams(1.0));
    const auto after = exact_expectations(apply_update(p, sr_update(before.moments, cfg)), TfiParams(1.0));
    CHECK(after.energy() < before.energy());
  }
}

namespace {

// Uphill moves over 100 exact-moment iterations at L=8, gamma=1.
int uphill_steps(RbmParams p, const SrConfig& cfg, bool capped) {
  double prev = exact_expectations(p, TfiParams(1.0)).energy();
  const double start = prev;
  int violations = 0;
  for (int it = 0; it < 100; ++it) {
    const auto ex = exact_expectations(p, TfiParams(1.0));
    p = apply_update(p, capped ? sr_step(ex.moments, cfg) : sr_update(ex.moments, cfg));
    const double e = ex.energy();
    const double next = exact_expectations(p, TfiParams(1.0)).energy();
    if (next > e + 1e-9) ++violations;
    prev = next;
  }
  CHECK(prev < start);
  return violations;
}

}  // namespace

TEST_CASE("exact SR descends monotonically") {
  for (double eta : {0.02, 0.01}) {
    SrConfig cfg;
    cfg.eta = eta;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      CAPTURE(eta);
      CAPTURE(seed);
      CHECK(uphill_steps(random_params(8, cfg.init_scale, seed), cfg, true) == 0);
      CHECK(uphill_steps(random_params(8, 0.3, seed), cfg, false) == 0);
    }
  }
}

TEST_CASE("step cap") {
  SrConfig cfg;
  cfg.max_step = 0.1;
  const auto ex = exact_expectations(random_params(8, 0.01, 2), TfiParams(1.0));
  const auto raw = sr_update(ex.moments, cfg);
  REQUIRE(raw.norm() > 0.1);
  const auto capped = sr_step(ex.moments, cfg);
  CHECK(capped.norm() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK((capped.normalized() - raw.normalized()).norm() < 1e-12);
  cfg.max_step = 0.0;
  CHECK(sr_step(ex.moments, cfg) == raw);
  const auto settled = exact_expectations(random_params(8, 0.3, 2), TfiParams(1.0));
  cfg.max_step = 0.1;
  cfg.eta = 0.001;
  REQUIRE(sr_update(settled.moments, cfg).norm() < 0.1);
  CHECK(sr_step(settled.moments, cfg) == sr_update(settled.moments, cfg));
}

TEST_CASE("exact SR converges to the best translation-invariant RBM") {
  // minimum of the enumerated energy over W found by BFGS from 12 random starts
  const double best = -10.24442986489047;
  SrConfig cfg;
  cfg.eta = 0.02;
  auto p = random_params(8, cfg.init_scale, 5);
  for (int it = 0; it < 1500; ++it) {
    p = apply_update(p, sr_step(exact_expectations(p, TfiParams(1.0)).moments, cfg));
  }
  const auto ex = exact_expectations(p, TfiParams(1.0));
  CHECK(ex.energy() == doctest::Approx(best).epsilon(1e-10));
  CHECK(ex.eloc_variance / 8.0 == doctest::Approx(0.005960776449600101).epsilon(1e-5));
}

TEST_CASE("exact S is positive semidefinite") {
  for (double g : {0.5, 1.0, 1.5}) {
    const auto ex = exact_expectations(random_params(8, 0.4, 9), TfiParams(g));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ex.s_matrix);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("random_params respects the scale and the seed") {
  const auto a = random_params(32, 0.01, 7);
  const auto b = random_params(32, 0.01, 7);
  const auto c = random_params(32, 0.01, 8);
  CHECK(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()));
  CHECK(!std::equal(a.weights().begin(), a.weights().end(), c.weights().begin()));
  for (double w : a.weights()) CHECK(std::abs(w) <= 0.01);
}

TEST_CASE("configuration validation") {
  SrConfig cfg;
  cfg.eta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
  cfg = SrConfig{};
  cfg.lambda_rel = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
  cfg = SrConfig{};
  cfg.n_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
  cfg = SrConfig{};
  cfg.max_step = -0.1;
  CHECK_THROWS_AS(cfg.validate(), ConfigurationError);
  CHECK_NOTHROW(SrConfig{}.validate());
}

TEST_CASE("applied steps never exceed max_step") {
  auto sr = sr_config(30, 4);
  sr.max_step = 0.02;
  const auto res = optimize(8, TfiParams(1.0), sr, sampler(4));
  REQUIRE(res.trace.records.size() == 30);
  for (const auto& r : res.trace.records) CHECK(r.delta_w_norm <= 0.02 + 1e-15);
}

TEST_CASE("optimization is reproducible") {
  auto sr = sr_config(40, 11);
  sr.snapshot_every = 10;
  const auto a = optimize(10, TfiParams(0.8), sr, sampler(3));
  const auto b = optimize(10, TfiParams(0.8), sr, sampler(3));
  CHECK(a.trace.csv().str() == b.trace.csv().str());
  CHECK(std::equal(a.params.weights().begin(), a.params.weights().end(), b.params.weights().begin()));
  CHECK(a.trace.snapshots.size() == 4);
  auto other = sr;
  other.seed = 12;
  const auto c = optimize(10, TfiParams(0.8), other, sampler(3));
  CHECK(!std::equal(a.params.weights().begin(), a.params.weights().end(), c.params.weights().begin()));
}

TEST_CASE("trace records are indexed and finite") {
  const auto res = optimize(6, TfiParams(1.2), sr_config(25, 2), sampler(8));
  for (std::size_t k = 0; k < res.trace.records.size(); ++k) {
    const auto& r = res.trace.records[k];
    CHECK(r.iter == static_cast<int>(k));
    CHECK(std::isfinite(r.energy));
    CHECK(std::isfinite(r.energy_err));
    CHECK(std::isfinite(r.eloc_var));
    CHECK(std::isfinite(r.delta_w_norm));
  }
  CHECK(res.trace.csv().header() ==
        std::vector<std::string>{"iter", "energy", "energy_err", "eloc_var", "delta_w_norm"});
}

TEST_CASE("L=8 at the critical field reaches the ED energy") {
  const auto res = optimize(8, TfiParams(1.0), sr_config(500, 1), sampler(21));
  const double e = exact_expectations(res.params, TfiParams(1.0)).energy();
  const double ed = ed_ground_state(8, TfiParams(1.0)).ground_energy;
  MESSAGE("variational " << e << " ed " << ed);
  CHECK(rel_error(e, ed) <= 1e-3);
}

namespace {

const VmcEstimate& optimized_16_half() {
  static const VmcEstimate est = [] {
    const auto res = optimize(16, TfiParams(0.5), sr_config(1000, 1), sampler(5));
    return estimate(res.params, TfiParams(0.5), sampler(6));
  }();
  return est;
}

}  // namespace

TEST_CASE("L=16 at gamma 0.5 reaches the free-fermion energy") {
  const auto& est = optimized_16_half();
  const double exact = free_fermion_energy(16, TfiParams(0.5));
  MESSAGE("variational " << est.energy.mean << " +- " << est.energy.error << " exact " << exact);
  CHECK(rel_error(est.energy.mean, exact) <= 1e-3);
}

TEST_CASE("L=16 at gamma 0.5 has E_loc variance per site below 1e-3") {
  const auto& est = optimized_16_half();
  MESSAGE("E_loc variance per site " << est.eloc_variance / 16.0);
  CHECK(est.eloc_variance / 16.0 < 1e-3);
}

TEST_CASE("zero field converges to the ferromagnet") {
  const auto res = optimize(8, TfiParams(0.0), sr_config(500, 3), sampler(13));
  const double diag = exact_expectations(res.params, TfiParams(0.0)).energy() / 8.0;
  MESSAGE("diagonal energy per site " << diag);
  CHECK(std::abs(diag + 1.0) <= 5e-3);
}
