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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any gated criterion fails. Optimized couplings and thermal scans
// are cached on disk so reruns only redo the checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../../src/cli/manifest.hpp"
#include "oracles.hpp"
#include "rbmtfi/analysis.hpp"
#include "rbmtfi/cli.hpp"
#include "rbmtfi/errors.hpp"
#include "rbmtfi/exact.hpp"
#include "rbmtfi/parallel.hpp"
#include "rbmtfi/sr.hpp"
#include "rbmtfi/thermo.hpp"
#include "rbmtfi/vmc.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace rbmtfi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string short_real(double x) { return fmt("%g", x); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Optimized RBMs and thermal scans, computed once and cached.

struct Optimized {
  double gamma = 0.0;
  int length = 0;
  std::uint64_t seed = 0;
  std::vector<double> w;
  double energy = 0.0, energy_err = 0.0, exact = 0.0, rel_error = 0.0;
  double w_tail = 0.0, w_tail_l = 0.0;
  double seconds = 0.0;
};

class Workbench {
 public:
  Workbench(fs::path cache, std::uint64_t master_seed, int threads)
      : master_(master_seed), threads_(threads) {
    sampler_.n_chains = 4;
    sampler_.n_threads = threads;
    thermal_.n_sweeps = 10000;
    thermal_.n_burnin = 1000;
    thermal_.n_chains = 4;
    thermal_.n_threads = threads;
    std::ostringstream key;
    key << "sr " << sr_.eta << ' ' << sr_.lambda_abs << ' ' << sr_.lambda_rel << ' ' << sr_.n_iters
        << ' ' << sr_.init_scale << ' ' << sr_.max_step << " vmc " << sampler_.n_sweeps << ' '
        << sampler_.n_burnin << ' ' << sampler_.n_rethermalize << ' ' << sampler_.n_chains
        << " thermal " << thermal_.n_sweeps << ' ' << thermal_.n_burnin << ' ' << thermal_.n_chains
        << " seed " << master_;
    dir_ = cache / cli::sha256_hex(key.str()).substr(0, 16);
    fs::create_directories(dir_);
    write_file_atomic(dir_ / "settings.txt", key.str() + "\n");
  }

  static const std::vector<double>& grid() {
    static const std::vector<double> g = cli::parse_real_list("0.5:1.5:0.1");
    return g;
  }

  static std::size_t grid_index(double gamma) {
    for (std::size_t k = 0; k < grid().size(); ++k) {
      if (std::abs(grid()[k] - gamma) < 1e-9) return k;
    }
    throw ConfigurationError("gamma " + short_real(gamma) + " is not on the scan grid");
  }

  // Same seeding as `rbmtfi reproduce` with this master seed.
  std::uint64_t length_seed(int length) const {
    return derive_seed(master_, static_cast<std::uint64_t>(length));
  }

  const Optimized& optimized(int length, double gamma) {
    const auto k = grid_index(gamma);
    const auto key = std::make_pair(length, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto file = dir_ / ("opt_L" + std::to_string(length) + "_k" + std::to_string(k) + ".json");
    Optimized o;
    if (fs::exists(file)) {
      const auto j = json::parse(read_file(file));
      o.gamma = j["gamma"];
      o.length = j["L"];
      o.seed = j["seed"];
      o.w = j["W"].get<std::vector<double>>();
      o.energy = j["energy"];
      o.energy_err = j["energy_err"];
      o.exact = j["exact_energy"];
      o.rel_error = j["rel_error"];
      o.w_tail = j["w_tail"];
      o.w_tail_l = j["w_tail_L"];
      o.seconds = j["seconds"];
      std::cerr << "  cached L=" << length << " gamma=" << short_real(grid()[k]) << "\n";
    } else {
      std::cerr << "  optimizing L=" << length << " gamma=" << short_real(grid()[k]) << " ..."
                << std::flush;
      const auto t0 = Clock::now();
      const auto p = scan_point(grid()[k], length, sr_, sampler_, derive_seed(length_seed(length), k));
      if (!p.ok) throw Error("scan point failed: " + p.error);
      o.gamma = p.gamma;
      o.length = length;
      o.seed = p.seed;
      o.w.assign(p.params->weights().begin(), p.params->weights().end());
      o.energy = p.energy;
      o.energy_err = p.energy_err;
      o.exact = p.exact_energy;
      o.rel_error = p.rel_error;
      o.w_tail = p.tail.w_tail;
      o.w_tail_l = p.tail.w_tail_times_l;
      o.seconds = seconds_since(t0);
      std::cerr << " " << fmt("%.0f", o.seconds) << " s, rel. error " << fmt("%.2e", o.rel_error)
                << "\n";
      json j{{"gamma", o.gamma},       {"L", o.length},           {"seed", o.seed},
             {"W", o.w},               {"energy", o.energy},      {"energy_err", o.energy_err},
             {"exact_energy", o.exact}, {"rel_error", o.rel_error}, {"w_tail", o.w_tail},
             {"w_tail_L", o.w_tail_l}, {"seconds", o.seconds}};
      write_file_atomic(file, j.dump(1) + "\n");
    }
    return memo_.emplace(key, std::move(o)).first->second;
  }

  // Thermal rows for the optimized RBM at (L, gamma) on `temps`; seeded as in
  // `rbmtfi reproduce fig5/fig6`.
  std::vector<ThermoRow> thermal(int length, double gamma, const std::vector<double>& temps,
                                 const std::string& label) {
    const auto k = grid_index(gamma);
    const auto file = dir_ / ("thermo_" + label + "_L" + std::to_string(length) + "_k" +
                              std::to_string(k) + ".json");
    std::vector<ThermoRow> rows;
    if (fs::exists(file)) {
      for (const auto& r : json::parse(read_file(file))) {
        ThermoRow row;
        row.t = r["T"];
        row.e_per_site = r["e"];
        row.e_err = r["e_err"];
        row.var_per_site = r["var"];
        row.var_err = r["var_err"];
        row.c_per_site = r["c"];
        row.c_err = r["c_err"];
        row.ok = r["ok"];
        row.error = r["error"];
        rows.push_back(row);
      }
      return rows;
    }
    const auto& o = optimized(length, gamma);
    auto cfg = thermal_;
    cfg.seed = derive_seed(length_seed(length), 1000 + k);
    std::cerr << "  thermal scan L=" << length << " gamma=" << short_real(gamma) << " ..." << std::flush;
    const auto t0 = Clock::now();
    rows = temperature_scan(RbmParams(o.w), temps, cfg);
    std::cerr << " " << fmt("%.0f", seconds_since(t0)) << " s\n";
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"T", r.t}, {"e", r.e_per_site}, {"e_err", r.e_err}, {"var", r.var_per_site},
                     {"var_err", r.var_err}, {"c", r.c_per_site}, {"c_err", r.c_err},
                     {"ok", r.ok}, {"error", r.error}});
    }
    write_file_atomic(file, out.dump(1) + "\n");
    return rows;
  }

  const SamplerConfig& thermal_config() const { return thermal_; }
  int threads() const { return threads_; }

 private:
  fs::path dir_;
  std::uint64_t master_;
  int threads_;
  SrConfig sr_;
  SamplerConfig sampler_;
  SamplerConfig thermal_;
  std::map<std::pair<int, std::size_t>, Optimized> memo_;
};

// ---------------------------------------------------------------------------
// Criteria

Outcome energy_accuracy(Workbench& wb) {
  Outcome out{true, ""};
  double slowest = 0.0;
  std::ostringstream d;
  for (double g : {0.5, 0.9, 1.0, 1.1, 1.5}) {
    const auto& o = wb.optimized(16, g);
    const double limit = g == 1.0 ? 2e-3 : 1e-3;
    const bool ok = o.rel_error <= limit && std::isfinite(o.rel_error);
    out.pass = out.pass && ok;
    slowest = std::max(slowest, o.seconds);
    d << "G=" << short_real(g) << ":" << fmt("%.2e", o.rel_error) << (ok ? "" : "(>limit)") << " ";
  }
  const bool fast = slowest <= 600.0;
  out.pass = out.pass && fast;
  d << "| slowest point " << fmt("%.0f", slowest) << " s (limit 600 s)";
  out.detail = "L=16 relative errors " + d.str();
  return out;
}

Outcome oracle_cross_validation(Workbench&) {
  double worst = 0.0;
  for (int l = 2; l <= 12; l += 2) {
    for (double g : {0.2, 0.5, 1.0, 1.5, 2.0}) {
      const double ed = ed_ground_state(l, TfiParams(g)).ground_energy;
      const double ff = free_fermion_energy(l, TfiParams(g));
      worst = std::max(worst, std::abs(ed - ff) / std::abs(ff));
    }
  }
  return {worst <= 1e-9, "max |ED - FF|/|FF| over even L<=12 and 5 fields = " + fmt("%.2e", worst) +
                             " (limit 1e-9)"};
}

Outcome critical_limit(Workbench&) {
  const double e = free_fermion_energy(4096, TfiParams(1.0)) / 4096.0;
  const double diff = std::abs(e + 4.0 / M_PI);
  return {diff <= 1e-5, "E0(4096,1)/4096 = " + fmt("%.12f", e) + ", |diff from -4/pi| = " +
                            fmt("%.2e", diff) + " (limit 1e-5)"};
}

struct Drop {
  double size = 0.0;
  double from = 0.0, to = 0.0;
};

Drop max_drop(Workbench& wb, int length) {
  Drop best{-1e300, 0, 0};
  const auto& g = Workbench::grid();
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    const double drop = wb.optimized(length, g[k]).w_tail_l - wb.optimized(length, g[k + 1]).w_tail_l;
    if (drop > best.size) best = {drop, g[k], g[k + 1]};
  }
  return best;
}

Outcome tail_dichotomy(Workbench& wb) {
  const auto t0 = Clock::now();
  double total = 0.0;
  for (int l : {32, 64}) {
    for (double g : Workbench::grid()) total += wb.optimized(l, g).seconds;
  }
  const double a = std::abs(wb.optimized(64, 0.8).w_tail);
  const double b = std::abs(wb.optimized(64, 1.2).w_tail);
  const bool ratio_ok = a > 5.0 * b;
  const auto d64 = max_drop(wb, 64);
  const auto d32 = max_drop(wb, 32);
  const bool located = d64.from >= 0.9 - 1e-9 && d64.to <= 1.1 + 1e-9;
  const bool sharper = d64.size > d32.size;
  const bool fast = total <= 7200.0;
  std::ostringstream d;
  d << "|w_tail(0.8)|=" << fmt("%.3e", a) << " vs 5|w_tail(1.2)|=" << fmt("%.3e", 5 * b)
    << (ratio_ok ? "" : " [ratio fails]") << "; L=64 max drop " << fmt("%.4f", d64.size) << " between "
    << short_real(d64.from) << " and " << short_real(d64.to) << (located ? "" : " [outside 0.9..1.1]")
    << "; L=32 max drop " << fmt("%.4f", d32.size) << " between " << short_real(d32.from) << " and "
    << short_real(d32.to) << (sharper ? "" : " [not sharper]") << "; optimization time "
    << fmt("%.0f", total) << " s (limit 7200 s)";
  (void)t0;
  return {ratio_ok && located && sharper && fast, d.str()};
}

Outcome thermo_sanity(Workbench& wb) {
  const auto cfg_base = wb.thermal_config();
  bool ok = true;
  double worst = 0.0;
  const auto w = oracle::random_couplings(5, 0.6, 23);
  const RbmParams p(w);
  for (double t : {0.5, 1.0, 2.0}) {
    std::vector<double> es;
    double z = 0.0, e = 0.0, e2 = 0.0, emin = 0.0;
    for (std::uint64_t b = 0; b < 1024; ++b) {
      es.push_back(oracle::rbm_energy(w, oracle::spins(b & 31, 5), oracle::spins(b >> 5, 5)));
      emin = std::min(emin, es.back());
    }
    for (double x : es) {
      const double q = std::exp(-(x - emin) / t);
      z += q;
      e += q * x;
      e2 += q * x * x;
    }
    e /= z;
    e2 /= z;
    const double c_exact = (e2 - e * e) / (t * t * 10);
    auto cfg = cfg_base;
    cfg.seed = derive_seed(77, static_cast<std::uint64_t>(t * 10));
    const auto s = thermal_sample(p, Temperature(t), cfg);
    const auto c = specific_heat(s.e, s.e2, Temperature(t), 10);
    const double de = std::abs(s.e.mean - e) / s.e.error;
    const double dc = std::abs(c.mean - c_exact) / c.error;
    worst = std::max({worst, de, dc});
    ok = ok && de <= 3.0 && dc <= 3.0;
  }
  const int n = 16;
  const double wp = 0.8;
  std::vector<double> pair(n, 0.0);
  pair[0] = wp;
  double worst_pair = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    auto cfg = cfg_base;
    cfg.seed = derive_seed(78, static_cast<std::uint64_t>(t * 10));
    const auto s = thermal_sample(RbmParams(pair), Temperature(t), cfg);
    const double dev = std::abs(s.e.mean + n * wp * std::tanh(wp / t)) / s.e.error;
    worst_pair = std::max(worst_pair, dev);
    ok = ok && dev <= 3.0;
  }
  return {ok, "L=5 enumeration: worst deviation " + fmt("%.2f", worst) +
                  " sigma for <E> and C at T=0.5,1,2; pair formula worst " + fmt("%.2f", worst_pair) +
                  " sigma (limit 3)"};
}

struct Peak {
  double c = 0.0, err = 0.0, t = 0.0;
};

Peak peak_of(const std::vector<ThermoRow>& rows) {
  Peak p{-1.0, 0.0, 0.0};
  for (const auto& r : rows) {
    if (r.ok && r.c_per_site > p.c) p = {r.c_per_site, r.c_err, r.t};
  }
  return p;
}

Outcome specific_heat_dichotomy(Workbench& wb) {
  const auto grid = default_temperature_grid();
  std::map<std::pair<int, double>, Peak> peaks;
  for (double g : {0.9, 1.1}) {
    for (int l : {16, 32, 64}) peaks[{l, g}] = peak_of(wb.thermal(l, g, grid, "grid"));
  }
  const auto& p16 = peaks[{16, 0.9}];
  const auto& p32 = peaks[{32, 0.9}];
  const auto& p64 = peaks[{64, 0.9}];
  const bool grows = p16.c < p32.c && p32.c < p64.c;
  const bool para = p16.t < 1.0 && p32.t < 1.0 && p64.t < 1.0;
  bool flat = true;
  for (int a : {16, 32, 64}) {
    for (int b : {16, 32, 64}) {
      if (a >= b) continue;
      const auto& x = peaks[{a, 1.1}];
      const auto& y = peaks[{b, 1.1}];
      flat = flat && std::abs(x.c - y.c) <= x.err + y.err;
    }
  }
  std::ostringstream d;
  d << "G=0.9 peaks";
  for (int l : {16, 32, 64}) {
    const auto& p = peaks[{l, 0.9}];
    d << " L" << l << ":" << fmt("%.4f", p.c) << "+-" << fmt("%.4f", p.err) << "@T=" << short_real(p.t);
  }
  d << (grows ? "" : " [not growing]") << (para ? "" : " [T=1 not above peak]") << "; G=1.1 peaks";
  for (int l : {16, 32, 64}) {
    const auto& p = peaks[{l, 1.1}];
    d << " L" << l << ":" << fmt("%.4f", p.c) << "+-" << fmt("%.4f", p.err) << "@T=" << short_real(p.t);
  }
  d << (flat ? "" : " [error bars do not overlap]");
  return {grows && para && flat, d.str()};
}

Outcome variance_dichotomy(Workbench& wb) {
  const auto low = wb.thermal(64, 0.8, {1.0}, "t1").front();
  const auto high = wb.thermal(64, 1.2, {1.0}, "t1").front();
  const double ratio = low.var_per_site / high.var_per_site;
  return {low.ok && high.ok && ratio >= 3.0,
          "L=64 T=1 variance per site: G=0.8 " + fmt("%.4f", low.var_per_site) + "+-" +
              fmt("%.4f", low.var_err) + ", G=1.2 " + fmt("%.4f", high.var_per_site) + "+-" +
              fmt("%.4f", high.var_err) + ", ratio " + fmt("%.2f", ratio) + " (limit 3)"};
}

// The property suites also run as unit tests; this is the self-contained
// acceptance pass over the same invariants.
Outcome property_suites(Workbench& wb) {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };

  // rbm symmetries, gauge, hidden trace
  {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const int n = 6;
      const auto w = oracle::random_couplings(n, 0.8, 100 + trial);
      const RbmParams p(w);
      std::vector<double> neg(w);
      for (auto& x : neg) x = -x;
      for (int k = 0; k < 20; ++k) {
        auto s = SpinConfig::from_bits(rng() & 63u, n);
        const double ref = log_psi(p, s);
        auto flipped = s;
        flipped.flip_all();
        expect(std::abs(log_psi(p, flipped) - ref) < 1e-12, "global flip");
        expect(std::abs(log_psi(p, shift(s, k % n)) - ref) < 1e-12, "translation");
        expect(std::abs(log_psi(RbmParams(neg), s) - ref) < 1e-12, "gauge");
        std::vector<int> raw(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = s[i];
        expect(std::abs(std::log(oracle::hidden_trace(w, raw)) - ref) < 1e-10, "hidden trace");
      }
    }
  }
  // log-derivatives against central differences
  {
    const int n = 10;
    const auto w = oracle::random_couplings(n, 0.5, 7);
    const RbmParams p(w);
    const double h = 1e-5;
    for (std::uint64_t b : {0ull, 77ull, 513ull, 1023ull}) {
      const auto s = SpinConfig::from_bits(b, n);
      const auto o = log_derivatives(p, ThetaCache(p, s), s);
      for (int d = 0; d < n; ++d) {
        auto up = w, down = w;
        up[static_cast<std::size_t>(d)] += h;
        down[static_cast<std::size_t>(d)] -= h;
        const double fd = (log_psi(RbmParams(up), s) - log_psi(RbmParams(down), s)) / (2 * h);
        expect(std::abs(fd - o[static_cast<std::size_t>(d)]) < 1e-6, "log-derivative");
      }
    }
  }
  // SR monotone descent under exact moments
  {
    SrConfig cfg;
    cfg.eta = 0.02;
    auto p = random_params(8, cfg.init_scale, 1);
    double e = exact_expectations(p, TfiParams(1.0)).energy();
    for (int it = 0; it < 100; ++it) {
      p = apply_update(p, sr_step(exact_expectations(p, TfiParams(1.0)).moments, cfg));
      const double next = exact_expectations(p, TfiParams(1.0)).energy();
      expect(next <= e + 1e-9, "SR descent");
      e = next;
    }
  }
  // detailed balance: quantum sampler at L=6, thermal sampler at L=4
  {
    const int n = 6;
    const auto w = oracle::random_couplings(n, 0.6, 12);
    const RbmParams p(w);
    std::vector<double> prob(1u << n);
    double z = 0.0;
    for (std::uint64_t b = 0; b < prob.size(); ++b) {
      prob[b] = std::exp(2.0 * oracle::log_psi(w, oracle::spins(b, n)));
      z += prob[b];
    }
    for (auto& x : prob) x /= z;
    VmcChain chain(p, 99);
    for (int s = 0; s < 1000; ++s) metropolis_sweep(chain, p);
    std::vector<double> counts(prob.size(), 0.0);
    for (long s = 0; s < 500000; ++s) {
      metropolis_sweep(chain, p);
      if (s % 10 == 0) counts[chain.config().to_bits()] += 1.0;
    }
    expect(oracle::chi_square_p(counts, prob) > 0.001, "quantum chi-square");
  }
  {
    const int n = 4;
    const auto w = oracle::random_couplings(n, 0.5, 8);
    for (double t : {1.0, 3.0}) {
      std::vector<double> prob(256);
      double z = 0.0;
      for (std::uint64_t b = 0; b < prob.size(); ++b) {
        prob[b] = std::exp(-oracle::rbm_energy(w, oracle::spins(b & 15, n), oracle::spins(b >> n, n)) / t);
        z += prob[b];
      }
      for (auto& x : prob) x /= z;
      std::vector<double> counts(prob.size(), 0.0);
      for (auto b : thermal_trajectory(RbmParams(w), Temperature(t), 2000000, 1000, 10, 45)) counts[b] += 1.0;
      expect(oracle::chi_square_p(counts, prob) > 0.001, "thermal chi-square");
    }
  }
  // bit-identical reruns
  {
    SrConfig sr;
    sr.n_iters = 20;
    sr.seed = 4;
    SamplerConfig sc;
    sc.n_sweeps = 300;
    sc.n_burnin = 50;
    sc.n_chains = 4;
    sc.seed = 6;
    sc.n_threads = 1;
    const auto a = optimize(12, TfiParams(0.9), sr, sc).trace.csv().str();
    sc.n_threads = std::max(2, wb.threads());
    const auto b = optimize(12, TfiParams(0.9), sr, sc).trace.csv().str();
    expect(a == b, "optimization rerun");
    const RbmParams p(oracle::random_couplings(12, 0.3, 1));
    const auto t1 = thermal_sample(p, Temperature(1.5), sc);
    const auto t2 = thermal_sample(p, Temperature(1.5), sc);
    expect(t1.e.bins == t2.e.bins && t1.e2.mean == t2.e2.mean, "thermal rerun");
  }

  std::string detail = "rbm invariants, log-derivatives (1e-6), exact-moment SR descent at L=8, "
                       "chi-square at L=6 (quantum) and L=4 (thermal), bit-identical reruns";
  if (!failed.empty()) {
    std::sort(failed.begin(), failed.end());
    failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
    detail += "; failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  return {failed.empty(), detail};
}

Outcome paper_scale_not_gated(Workbench&) {
  std::vector<std::string> args{"rbmtfi", "reproduce", "fig5", "--scale", "paper", "--out",
                                (fs::temp_directory_path() / "rbmtfi_acceptance_paper_guard").string()};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  const bool guarded = code == 2 && err.str().find("--confirm") != std::string::npos;
  return {guarded, "L=256 runs are reachable through `reproduce --scale paper --confirm` and are not "
                   "run here; without --confirm the command exits with code " +
                       std::to_string(code)};
}

struct Criterion {
  std::string name;
  std::function<Outcome(Workbench&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rbmtfi acceptance checks"};
  std::string only;
  std::string cache = "acceptance_cache";
  std::uint64_t seed = 1;
  int threads = 0;
  bool list = false;
  app.add_option("--only", only, "comma-separated criterion names to run");
  app.add_option("--cache", cache, "directory for optimized couplings and thermal scans");
  app.add_option("--seed", seed, "master seed (same meaning as for `rbmtfi reproduce`)");
  app.add_option("--threads", threads, "worker threads (default: RBMTFI_THREADS or hardware)");
  app.add_flag("--list", list, "list criterion names and exit");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"energy-accuracy", energy_accuracy},
      {"oracle-cross-validation", oracle_cross_validation},
      {"critical-limit", critical_limit},
      {"tail-dichotomy", tail_dichotomy},
      {"thermodynamics-sanity", thermo_sanity},
      {"specific-heat-dichotomy", specific_heat_dichotomy},
      {"variance-dichotomy", variance_dichotomy},
      {"property-suites", property_suites},
      {"paper-scale-not-gated", paper_scale_not_gated},
  };
  if (list) {
    for (const auto& c : criteria) std::cout << c.name << "\n";
    return 0;
  }
  std::vector<std::string> selected;
  if (!only.empty()) {
    std::stringstream ss(only);
    std::string item;
    while (std::getline(ss, item, ',')) selected.push_back(item);
    for (const auto& s : selected) {
      if (std::none_of(criteria.begin(), criteria.end(), [&](const Criterion& c) { return c.name == s; })) {
        std::cerr << "unknown criterion '" << s << "'; use --list\n";
        return 2;
      }
    }
  }

  Workbench wb(cache, seed, threads > 0 ? threads : default_thread_count());
  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.name) == selected.end()) continue;
    std::cerr << "[" << c.name << "]\n";
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run(wb);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " ["
              << fmt("%.0f", seconds_since(t0)) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
