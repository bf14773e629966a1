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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbmtfi/analysis.hpp"
#include "rbmtfi/errors.hpp"
#include "rbmtfi/exact.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/sr.hpp"
#include "rbmtfi/thermo.hpp"

namespace py = pybind11;
using namespace rbmtfi;

namespace {

std::vector<double> values(const RbmParams& p) { return {p.weights().begin(), p.weights().end()}; }

SamplerConfig sampler_config(long n_sweeps, long n_burnin, int n_chains, std::uint64_t seed,
                             int n_threads) {
  SamplerConfig cfg;
  cfg.n_sweeps = n_sweeps;
  cfg.n_burnin = n_burnin;
  cfg.n_chains = n_chains;
  cfg.seed = seed;
  cfg.n_threads = n_threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rbmtfi core bindings";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());

  m.def("free_fermion_energy",
        [](int length, double gamma) { return free_fermion_energy(length, TfiParams(gamma)); },
        py::arg("length"), py::arg("gamma"), "Ground energy of the periodic chain in the even-parity sector.");
  m.def("ed_ground_energy",
        [](int length, double gamma) { return ed_ground_state(length, TfiParams(gamma)).ground_energy; },
        py::arg("length"), py::arg("gamma"));
  m.def("exact_ground_energy",
        [](int length, double gamma) { return exact_ground_energy(length, TfiParams(gamma)); },
        py::arg("length"), py::arg("gamma"));

  m.def("log_psi",
        [](const std::vector<double>& w, const std::vector<int>& spins) {
          return log_psi(RbmParams(w), SpinConfig(std::span<const int>(spins)));
        },
        py::arg("w"), py::arg("spins"));

  m.def("tail_window", &tail_window, py::arg("length"));
  m.def("w_tail", [](const std::vector<double>& aligned) { return w_tail(RbmParams(aligned)); },
        py::arg("aligned"));
  m.def("align_origin",
        [](const std::vector<double>& w) {
          const auto a = align_origin(RbmParams(w));
          py::dict out;
          out["w"] = values(a.aligned);
          out["origin_index"] = a.origin_index;
          out["gauge_flipped"] = a.gauge_flipped;
          return out;
        },
        py::arg("w"));

  m.def("optimize",
        [](int length, double gamma, int n_iters, double eta, long n_sweeps, long n_burnin,
           int n_chains, std::uint64_t seed, int n_threads) {
          SrConfig sr;
          sr.n_iters = n_iters;
          sr.eta = eta;
          sr.seed = seed;
          const auto sampler = sampler_config(n_sweeps, n_burnin, n_chains, seed + 1, n_threads);
          OptResult result = [&] {
            py::gil_scoped_release release;
            return optimize(length, TfiParams(gamma), sr, sampler);
          }();
          std::vector<double> energy, energy_err;
          for (const auto& r : result.trace.records) {
            energy.push_back(r.energy);
            energy_err.push_back(r.energy_err);
          }
          py::dict out;
          out["w"] = values(result.params);
          out["energy"] = energy;
          out["energy_err"] = energy_err;
          return out;
        },
        py::arg("length"), py::arg("gamma"), py::arg("n_iters") = 1000, py::arg("eta") = 0.05,
        py::arg("n_sweeps") = 2000, py::arg("n_burnin") = 500, py::arg("n_chains") = 4,
        py::arg("seed") = 1, py::arg("n_threads") = 0,
        "Stochastic reconfiguration from a small random start. Returns the final couplings and the "
        "per-iteration energy trace.");

  m.def("temperature_scan",
        [](const std::vector<double>& w, const std::vector<double>& temps, long n_sweeps,
           long n_burnin, int n_chains, std::uint64_t seed, int n_threads) {
          const auto cfg = sampler_config(n_sweeps, n_burnin, n_chains, seed, n_threads);
          std::vector<ThermoRow> rows;
          {
            py::gil_scoped_release release;
            rows = temperature_scan(RbmParams(w), temps, cfg);
          }
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["T"] = r.t;
            d["e_per_site"] = r.e_per_site;
            d["e_err"] = r.e_err;
            d["var_per_site"] = r.var_per_site;
            d["var_err"] = r.var_err;
            d["c_per_site"] = r.c_per_site;
            d["c_err"] = r.c_err;
            d["ok"] = r.ok;
            d["error"] = r.error;
            out.append(d);
          }
          return out;
        },
        py::arg("w"), py::arg("temperatures"), py::arg("n_sweeps") = 10000,
        py::arg("n_burnin") = 1000, py::arg("n_chains") = 4, py::arg("seed") = 1,
        py::arg("n_threads") = 0);
}
