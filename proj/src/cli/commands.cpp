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

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "rbmtfi/analysis.hpp"
#include "rbmtfi/cli.hpp"
#include "rbmtfi/errors.hpp"
#include "rbmtfi/exact.hpp"
#include "rbmtfi/io.hpp"
#include "rbmtfi/parallel.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/sr.hpp"
#include "rbmtfi/thermo.hpp"
#include "rbmtfi/vmc.hpp"

#ifndef RBMTFI_VERSION
#define RBMTFI_VERSION "unknown"
#endif

namespace rbmtfi::cli {

namespace {

using KeyMap = std::map<std::string, std::string>;

const std::vector<std::string> kSamplerKeys = {"n_sweeps", "n_burnin", "n_rethermalize",
                                               "n_chains"};
const std::vector<std::string> kSrKeys = {"eta",        "lambda_abs", "lambda_rel",
                                          "n_iters",    "init_scale", "snapshot_every",
                                          "max_step"};
const std::vector<std::string> kThermalKeys = {"thermo_n_sweeps", "thermo_n_burnin",
                                               "thermo_n_chains"};

const std::map<std::string, std::string> kKeyHelp = {
    {"L", "chain length"},
    {"gamma", "transverse field"},
    {"seed", "master seed (required)"},
    {"eta", "SR learning rate"},
    {"lambda_abs", "absolute diagonal shift of S"},
    {"lambda_rel", "relative diagonal shift of S"},
    {"n_iters", "SR iterations"},
    {"init_scale", "scale of the random initial couplings"},
    {"snapshot_every", "store parameters every this many iterations (0: never)"},
    {"max_step", "largest applied update norm (0: unbounded)"},
    {"n_sweeps", "measurement sweeps per chain"},
    {"n_burnin", "discarded sweeps per chain"},
    {"n_rethermalize", "discarded sweeps after each parameter update"},
    {"n_chains", "independent Markov chains"},
    {"thermo_n_sweeps", "thermal measurement sweeps per chain"},
    {"thermo_n_burnin", "thermal discarded sweeps per chain"},
    {"thermo_n_chains", "thermal Markov chains"},
};

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Each key becomes a `--key` flag whose raw text lands in `sink`.
void bind_keys(CLI::App* app, KeyMap& sink, const std::vector<std::string>& keys) {
  for (const auto& k : keys) {
    const auto help = kKeyHelp.count(k) ? kKeyHelp.at(k) : k;
    app->add_option_function<std::string>(
        "--" + k, [&sink, k](const std::string& v) { sink[k] = v; }, help);
  }
}

// Config file first, then flags on top.
Settings resolve(const std::string& config_path, const KeyMap& flags,
                 const std::vector<std::string>& allowed) {
  Settings s = config_path.empty() ? Settings{} : Settings::load(config_path);
  for (const auto& [k, v] : flags) s.set(k, v);
  s.check_keys(allowed);
  return s;
}

int checked_length(const Settings& s) {
  const auto l = s.get_integer("L");
  if (l < 2 || l > 4096) throw ConfigurationError("key 'L': must lie in [2, 4096]");
  return static_cast<int>(l);
}

int checked_int(const Settings& s, const std::string& key, long long fallback) {
  const auto v = s.get_integer(key, fallback);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigurationError("key '" + key + "': out of range");
  }
  return static_cast<int>(v);
}

template <class F>
void with_key(const std::string& key, F&& f) {
  try {
    f();
  } catch (const ConfigurationError& e) {
    const std::string what = e.what();
    if (what.find('\'' + key + '\'') != std::string::npos) throw;
    throw ConfigurationError("key '" + key + "': " + what);
  }
}

SamplerConfig sampler_from(const Settings& s, int threads) {
  SamplerConfig cfg = SamplerConfig::defaults();
  cfg.n_sweeps = s.get_integer("n_sweeps", cfg.n_sweeps);
  cfg.n_burnin = s.get_integer("n_burnin", cfg.n_burnin);
  cfg.n_rethermalize = s.get_integer("n_rethermalize", cfg.n_rethermalize);
  cfg.n_chains = checked_int(s, "n_chains", cfg.n_chains);
  cfg.n_threads = threads;
  with_key("n_sweeps", [&] { if (cfg.n_sweeps < 1) throw ConfigurationError("must be positive"); });
  with_key("n_burnin", [&] { if (cfg.n_burnin < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("n_rethermalize",
           [&] { if (cfg.n_rethermalize < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("n_chains", [&] { if (cfg.n_chains < 1) throw ConfigurationError("must be positive"); });
  return cfg;
}

SamplerConfig thermal_from(const Settings& s, const std::string& prefix, int threads) {
  SamplerConfig cfg;
  cfg.n_sweeps = 10000;
  cfg.n_burnin = 1000;
  cfg.n_chains = 4;
  cfg.n_sweeps = s.get_integer(prefix + "n_sweeps", cfg.n_sweeps);
  cfg.n_burnin = s.get_integer(prefix + "n_burnin", cfg.n_burnin);
  cfg.n_chains = checked_int(s, prefix + "n_chains", cfg.n_chains);
  cfg.n_threads = threads;
  with_key(prefix + "n_sweeps",
           [&] { if (cfg.n_sweeps < 1) throw ConfigurationError("must be positive"); });
  with_key(prefix + "n_burnin",
           [&] { if (cfg.n_burnin < 0) throw ConfigurationError("must be nonnegative"); });
  with_key(prefix + "n_chains",
           [&] { if (cfg.n_chains < 1) throw ConfigurationError("must be positive"); });
  return cfg;
}

SrConfig sr_from(const Settings& s) {
  SrConfig cfg;
  cfg.eta = s.get_real("eta", cfg.eta);
  cfg.lambda_abs = s.get_real("lambda_abs", cfg.lambda_abs);
  cfg.lambda_rel = s.get_real("lambda_rel", cfg.lambda_rel);
  cfg.n_iters = checked_int(s, "n_iters", cfg.n_iters);
  cfg.init_scale = s.get_real("init_scale", cfg.init_scale);
  cfg.snapshot_every = checked_int(s, "snapshot_every", cfg.snapshot_every);
  cfg.max_step = s.get_real("max_step", cfg.max_step);
  with_key("eta", [&] { if (!(cfg.eta > 0)) throw ConfigurationError("must be positive"); });
  with_key("lambda_abs",
           [&] { if (cfg.lambda_abs < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("lambda_rel",
           [&] { if (cfg.lambda_rel < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("n_iters", [&] { if (cfg.n_iters < 1) throw ConfigurationError("must be positive"); });
  with_key("init_scale",
           [&] { if (cfg.init_scale < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("snapshot_every",
           [&] { if (cfg.snapshot_every < 0) throw ConfigurationError("must be nonnegative"); });
  with_key("max_step",
           [&] { if (cfg.max_step < 0) throw ConfigurationError("must be nonnegative"); });
  cfg.validate();
  return cfg;
}

void describe(KeyMap& m, const SamplerConfig& c, const std::string& prefix = "") {
  m[prefix + "n_sweeps"] = std::to_string(c.n_sweeps);
  m[prefix + "n_burnin"] = std::to_string(c.n_burnin);
  if (prefix.empty()) m["n_rethermalize"] = std::to_string(c.n_rethermalize);
  m[prefix + "n_chains"] = std::to_string(c.n_chains);
}

void describe(KeyMap& m, const SrConfig& c) {
  m["eta"] = format_real(c.eta);
  m["lambda_abs"] = format_real(c.lambda_abs);
  m["lambda_rel"] = format_real(c.lambda_rel);
  m["n_iters"] = std::to_string(c.n_iters);
  m["init_scale"] = format_real(c.init_scale);
  m["snapshot_every"] = std::to_string(c.snapshot_every);
  m["max_step"] = format_real(c.max_step);
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : ",") + format_real(x);
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string tag(double gamma) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", gamma);
  return buf;
}

std::string snapshot_text(const RbmParams& params) {
  std::ostringstream os;
  write_snapshot(os, params);
  return os.str();
}

int resolved_threads(int flag) { return flag > 0 ? flag : default_thread_count(); }

// ---------------------------------------------------------------------------

struct Globals {
  int threads = 0;
};

struct ExactArgs {
  int length = 0;
  std::string gamma;
  std::string method = "auto";
};

int cmd_exact(const ExactArgs& a, std::ostream& out) {
  if (a.method == "fermion" && a.length % 2 != 0) {
    throw CapabilityError("even L required for --method fermion (got L=" +
                          std::to_string(a.length) + "); use --method ed for odd L up to " +
                          std::to_string(kMaxEdLength));
  }
  if (a.method == "ed" && a.length > kMaxEdLength) {
    throw CapabilityError("--method ed supports L <= " + std::to_string(kMaxEdLength) + " (got L=" +
                          std::to_string(a.length) + "); use --method fermion for even L");
  }
  if (a.gamma.empty()) throw ConfigurationError("missing required key 'gamma'");
  double g = 0.0;
  with_key("gamma", [&] { g = parse_real(a.gamma); });
  const TfiParams tfi(g);
  double e = 0.0;
  if (a.method == "fermion") {
    e = free_fermion_energy(a.length, tfi);
  } else if (a.method == "ed") {
    e = ed_ground_state(a.length, tfi).ground_energy;
  } else {
    e = exact_ground_energy(a.length, tfi);
  }
  out << format_real(e) << "\n";
  return 0;
}

struct RunArgs {
  std::string config;
  std::string out;
  bool force = false;
  KeyMap flags;
};

int cmd_optimize(const RunArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto s = resolve(a.config, a.flags, concat({{"L", "gamma", "seed"}, kSrKeys, kSamplerKeys}));
  const int length = checked_length(s);
  const double gamma = s.get_real("gamma");
  with_key("gamma", [&] { TfiParams{gamma}; });
  const auto seed = s.get_seed("seed");
  const auto sr = sr_from(s);
  const auto sampler = sampler_from(s, resolved_threads(g.threads));

  KeyMap resolved{{"L", std::to_string(length)}, {"gamma", format_real(gamma)},
                  {"seed", std::to_string(seed)}, {"threads", std::to_string(sampler.n_threads)}};
  describe(resolved, sr);
  describe(resolved, sampler);
  RunDirectory run(a.out, a.force, "optimize", resolved, seed);

  err << "optimizing L=" << length << " gamma=" << format_real(gamma) << " for " << sr.n_iters
      << " iterations\n";
  const auto p = scan_point(gamma, length, sr, sampler, seed);
  run.write("trace.csv", p.trace.csv().str());
  for (const auto& [iter, params] : p.trace.snapshots) {
    run.write("snapshots/params_" + std::to_string(iter) + ".txt", snapshot_text(params));
  }
  if (!p.ok) {
    run.add_note("error", p.error);
    run.finish(false);
    err << "error: " << p.error << "\n";
    return 1;
  }
  run.write("params.txt", snapshot_text(*p.params));
  run.finish(true);
  out << "energy " << format_real(p.energy) << " +- " << format_real(p.energy_err) << "\n";
  out << "exact_energy " << format_real(p.exact_energy) << "\n";
  out << "rel_error " << format_real(p.rel_error) << "\n";
  return 0;
}

struct ThermoArgs {
  RunArgs run;
  std::string snapshot;
  std::string temps;
  bool heat_bath = false;
};

int cmd_thermo(const ThermoArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto s = resolve(a.run.config, a.run.flags,
                         {"gamma", "seed", "n_sweeps", "n_burnin", "n_chains"});
  if (a.snapshot.empty()) throw ConfigurationError("missing required option --snapshot");
  const auto params = load_snapshot(a.snapshot);
  const double gamma = s.get_real("gamma", std::nan(""));
  auto cfg = thermal_from(s, "", resolved_threads(g.threads));
  cfg.seed = s.get_seed("seed");
  std::vector<double> grid = default_temperature_grid();
  if (!a.temps.empty()) with_key("temps", [&] { grid = parse_real_list(a.temps); });
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) throw ConfigurationError("key 'temps': grid must be ascending");
  }

  KeyMap resolved{{"snapshot", a.snapshot},
                  {"gamma", format_real(gamma)},
                  {"L", std::to_string(params.size())},
                  {"seed", std::to_string(cfg.seed)},
                  {"temps", join(grid)},
                  {"update", a.heat_bath ? "heat_bath" : "metropolis"},
                  {"per_site_divisor", "2L"},
                  {"threads", std::to_string(cfg.n_threads)}};
  describe(resolved, cfg);
  RunDirectory run(a.run.out, a.run.force, "thermo", resolved, cfg.seed);

  err << "thermal scan over " << grid.size() << " temperatures, L=" << params.size() << "\n";
  const auto rows = temperature_scan(
      params, grid, cfg, a.heat_bath ? ThermalUpdate::kHeatBath : ThermalUpdate::kMetropolis);
  run.write("thermo.csv", thermo_csv(gamma, params.size(), rows).str());
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.ok) {
      ok = false;
      err << "error at T=" << format_real(r.t) << ": " << r.error << "\n";
    }
  }
  run.finish(ok);
  out << "wrote " << (run.path() / "thermo.csv").string() << "\n";
  return ok ? 0 : 1;
}

struct ScanArgs {
  RunArgs run;
  std::string gammas;
  std::string lengths;
};

void report_point(std::ostream& err, int length, const ScanPoint& p) {
  err << "L=" << length << " gamma=" << format_real(p.gamma);
  if (p.ok) {
    err << " energy=" << format_real(p.energy) << " rel_error=" << format_real(p.rel_error)
        << " w_tail_L=" << format_real(p.tail.w_tail_times_l) << "\n";
  } else {
    err << " failed: " << p.error << "\n";
  }
}

// Writes params, profile, tail and energy files for one L; returns false if a point failed.
bool write_scan(RunDirectory& run, int length, const std::vector<ScanPoint>& points) {
  bool ok = true;
  for (const auto& p : points) {
    if (!p.ok) {
      ok = false;
      run.add_note("failed_L" + std::to_string(length) + "_gamma" + tag(p.gamma), p.error);
      continue;
    }
    const auto stem = "L" + std::to_string(length) + "_gamma" + tag(p.gamma);
    run.write("params/" + stem + ".txt", snapshot_text(*p.params));
    run.write("profile_" + stem + ".csv", profile_csv(p.tail).str());
  }
  run.write("tail_L" + std::to_string(length) + ".csv", tail_csv(points, length).str());
  run.write("energy_L" + std::to_string(length) + ".csv", energy_csv(points, length).str());
  return ok;
}

int cmd_scan(const ScanArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto s = resolve(a.run.config, a.run.flags, concat({{"seed"}, kSrKeys, kSamplerKeys}));
  if (a.gammas.empty()) throw ConfigurationError("missing required option --gammas");
  if (a.lengths.empty()) throw ConfigurationError("missing required option --L");
  std::vector<double> gammas;
  std::vector<int> lengths;
  with_key("gammas", [&] { gammas = parse_real_list(a.gammas); });
  with_key("L", [&] { lengths = parse_int_list(a.lengths); });
  for (int l : lengths) {
    if (l < 2) throw ConfigurationError("key 'L': lengths must be at least 2");
  }
  for (double x : gammas) with_key("gammas", [&] { TfiParams{x}; });
  const auto seed = s.get_seed("seed");
  const auto sr = sr_from(s);
  const auto sampler = sampler_from(s, resolved_threads(g.threads));

  KeyMap resolved{{"gammas", join(gammas)}, {"L", join(lengths)}, {"seed", std::to_string(seed)},
                  {"threads", std::to_string(sampler.n_threads)}};
  describe(resolved, sr);
  describe(resolved, sampler);
  RunDirectory run(a.run.out, a.run.force, "scan", resolved, seed);

  bool ok = true;
  for (int length : lengths) {
    const auto points =
        gamma_scan(gammas, length, sr, sampler, derive_seed(seed, static_cast<std::uint64_t>(length)),
                   [&](const ScanPoint& p) { report_point(err, length, p); });
    ok = write_scan(run, length, points) && ok;
  }
  run.finish(ok);
  out << "wrote " << run.path().string() << "\n";
  return ok ? 0 : 1;
}

struct ReproduceArgs {
  RunArgs run;
  std::string figure;
  std::string scale = "desk";
  bool confirm = false;
};

std::vector<double> figure_gammas(const std::string& figure) {
  if (figure == "fig3") return {0.9, 1.0, 1.1};
  if (figure == "fig5") return {0.9, 1.1};
  return parse_real_list("0.5:1.5:0.1");
}

std::vector<int> figure_lengths(const std::string& figure, bool paper) {
  if (!paper) return {16, 32, 64};
  if (figure == "fig4" || figure == "fig5") return {32, 64, 128, 256};
  return {256};
}

int cmd_reproduce(const ReproduceArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> figures = {"fig2", "fig3", "fig4", "fig5", "fig6"};
  if (std::find(figures.begin(), figures.end(), a.figure) == figures.end()) {
    throw ConfigurationError("unknown figure '" + a.figure + "'; expected fig2..fig6");
  }
  if (a.scale != "desk" && a.scale != "paper") {
    throw ConfigurationError("key 'scale': expected desk or paper");
  }
  const bool paper = a.scale == "paper";
  if (paper) {
    err << "warning: paper scale runs L=256";
    if (a.figure == "fig5" || a.figure == "fig6") err << "; L=256 thermodynamics may take hours";
    else err << "; optimizations may take hours";
    err << "\n";
    if (!a.confirm) {
      err << "error: paper scale requires --confirm\n";
      return 2;
    }
  }
  const auto s = resolve(a.run.config, a.run.flags,
                         concat({{"seed"}, kSrKeys, kSamplerKeys, kThermalKeys}));
  const auto seed = s.get_seed("seed");
  const auto threads = resolved_threads(g.threads);
  const auto sr = sr_from(s);
  const auto sampler = sampler_from(s, threads);
  auto thermal = thermal_from(s, "thermo_", threads);
  const auto gammas = figure_gammas(a.figure);
  const auto lengths = figure_lengths(a.figure, paper);

  KeyMap resolved{{"figure", a.figure},       {"scale", a.scale},
                  {"gammas", join(gammas)},   {"L", join(lengths)},
                  {"seed", std::to_string(seed)}, {"threads", std::to_string(threads)}};
  describe(resolved, sr);
  describe(resolved, sampler);
  describe(resolved, thermal, "thermo_");
  if (a.figure == "fig5") resolved["temps"] = join(default_temperature_grid());
  RunDirectory run(a.run.out, a.run.force, "reproduce " + a.figure, resolved, seed);

  bool ok = true;
  for (int length : lengths) {
    const auto lseed = derive_seed(seed, static_cast<std::uint64_t>(length));
    const auto points = gamma_scan(gammas, length, sr, sampler, lseed,
                                   [&](const ScanPoint& p) { report_point(err, length, p); });
    ok = write_scan(run, length, points) && ok;
    const auto l = std::to_string(length);
    if (a.figure == "fig5") {
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (!points[k].ok) continue;
        thermal.seed = derive_seed(lseed, 1000 + k);
        const auto rows = temperature_scan(*points[k].params, default_temperature_grid(), thermal);
        for (const auto& r : rows) ok = ok && r.ok;
        run.write("thermo_L" + l + "_gamma" + tag(points[k].gamma) + ".csv",
                  thermo_csv(points[k].gamma, length, rows).str());
        err << "L=" << length << " gamma=" << format_real(points[k].gamma) << " thermal scan done\n";
      }
    } else if (a.figure == "fig6") {
      CsvTable table = thermo_csv(0.0, length, {});
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (!points[k].ok) continue;
        thermal.seed = derive_seed(lseed, 1000 + k);
        const auto rows = temperature_scan(*points[k].params, {1.0}, thermal);
        ok = ok && rows.front().ok;
        const auto& r = rows.front();
        table.add_row({cell(points[k].gamma), cell(length), cell(r.t), cell(r.e_per_site),
                       cell(r.e_err), cell(r.var_per_site), cell(r.var_err), cell(r.c_per_site),
                       cell(r.c_err), cell(static_cast<long long>(r.n_sweeps)), cell(r.seed)});
      }
      run.write("variance_L" + l + ".csv", table.str());
    }
  }
  run.finish(ok);
  out << "wrote " << run.path().string() << "\n";
  return ok ? 0 : 1;
}

void add_run_options(CLI::App* cmd, RunArgs& a, bool with_config = true) {
  if (with_config) cmd->add_option("--config", a.config, "key = value settings file");
  cmd->add_option("--out", a.out, "output directory")->required();
  cmd->add_flag("--force", a.force, "overwrite an existing run directory");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translation-invariant RBM study of the transverse-field Ising chain", "rbmtfi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", RBMTFI_VERSION);

  Globals globals;
  app.add_option("--threads", globals.threads,
                 "worker threads (default: RBMTFI_THREADS or hardware parallelism)")
      ->check(CLI::NonNegativeNumber);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "print the exact ground-state energy");
  exact->add_option("--L", exact_args.length, "chain length")->required()->check(CLI::Range(2, 1 << 20));
  exact->add_option("--gamma", exact_args.gamma, "transverse field");
  exact->add_option("--method", exact_args.method, "ed, fermion or auto")
      ->check(CLI::IsMember({"ed", "fermion", "auto"}));

  RunArgs opt_args;
  auto* optimize_cmd = app.add_subcommand("optimize", "optimize an RBM for one (L, gamma)");
  add_run_options(optimize_cmd, opt_args);
  bind_keys(optimize_cmd, opt_args.flags, concat({{"L", "gamma", "seed"}, kSrKeys, kSamplerKeys}));

  ThermoArgs thermo_args;
  auto* thermo = app.add_subcommand("thermo", "temperature scan of a saved RBM");
  add_run_options(thermo, thermo_args.run);
  thermo->add_option("--snapshot", thermo_args.snapshot, "parameter snapshot file")->required();
  thermo->add_option("--temps", thermo_args.temps, "temperatures, 'a:b:step' or 'x,y,...'");
  thermo->add_flag("--heat-bath", thermo_args.heat_bath, "layer-wise heat-bath updates");
  bind_keys(thermo, thermo_args.run.flags, {"gamma", "seed", "n_sweeps", "n_burnin", "n_chains"});

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "optimize over a gamma grid and analyze the couplings");
  add_run_options(scan, scan_args.run);
  scan->add_option("--gammas", scan_args.gammas, "gamma grid, 'a:b:step' or 'x,y,...'")->required();
  scan->add_option("--L", scan_args.lengths, "chain lengths, 'a,b,...'")->required();
  bind_keys(scan, scan_args.run.flags, concat({{"seed"}, kSrKeys, kSamplerKeys}));

  ReproduceArgs repro_args;
  auto* reproduce = app.add_subcommand("reproduce", "produce every CSV behind one figure");
  reproduce->add_option("figure", repro_args.figure, "fig2, fig3, fig4, fig5 or fig6")->required();
  reproduce->add_option("--scale", repro_args.scale, "desk or paper");
  reproduce->add_flag("--confirm", repro_args.confirm, "accept a paper-scale runtime");
  add_run_options(reproduce, repro_args.run);
  bind_keys(reproduce, repro_args.run.flags, concat({{"seed"}, kSrKeys, kSamplerKeys, kThermalKeys}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*exact) return cmd_exact(exact_args, out);
    if (*optimize_cmd) return cmd_optimize(opt_args, globals, out, err);
    if (*thermo) return cmd_thermo(thermo_args, globals, out, err);
    if (*scan) return cmd_scan(scan_args, globals, out, err);
    if (*reproduce) return cmd_reproduce(repro_args, globals, out, err);
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rbmtfi::cli
