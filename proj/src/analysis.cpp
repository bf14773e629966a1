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

#include "rbmtfi/analysis.hpp"

#include <cmath>

#include "rbmtfi/errors.hpp"
#include "rbmtfi/exact.hpp"

namespace rbmtfi {

AlignedParams align_origin(const RbmParams& params) {
  const int n = params.size();
  int origin = 0;
  double best = std::abs(params[0]);
  for (int d = 1; d < n; ++d) {
    if (std::abs(params[d]) > best) {
      best = std::abs(params[d]);
      origin = d;
    }
  }
  if (best == 0.0) throw DegenerateInputError("cannot align an all-zero coupling profile");

  const double sign = params[origin] < 0.0 ? -1.0 : 1.0;
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) w[static_cast<std::size_t>(d)] = sign * params[(d + origin) % n];
  return {RbmParams(std::move(w)), origin, sign < 0.0};
}

std::pair<int, int> tail_window(int length) {
  // ceil(L/2 - L/16) = ceil(7L/16), floor(L/2 + L/16) = floor(9L/16)
  const long long lo = (7LL * length + 15) / 16;
  const long long hi = (9LL * length) / 16;
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

double w_tail(const RbmParams& aligned) {
  const auto [lo, hi] = tail_window(aligned.size());
  if (aligned.size() < 2 || lo > hi) {
    throw DegenerateInputError("tail window is empty for L=" + std::to_string(aligned.size()));
  }
  double sum = 0.0;
  for (int d = lo; d <= hi; ++d) sum += aligned[d];
  return sum / (hi - lo + 1);
}

TailReport tail_report(const RbmParams& params, double gamma) {
  const auto a = align_origin(params);
  TailReport r;
  r.gamma = gamma;
  r.length = params.size();
  r.w_profile.assign(a.aligned.weights().begin(), a.aligned.weights().end());
  r.w_tail = w_tail(a.aligned);
  r.w_tail_times_l = r.w_tail * r.length;
  r.origin_index = a.origin_index;
  return r;
}

McEstimate evaluate_energy(const RbmParams& params, const TfiParams& tfi,
                           const SamplerConfig& sampler) {
  return estimate(params, tfi, sampler).energy;
}

ScanPoint scan_point(double gamma, int length, SrConfig sr, SamplerConfig sampler,
                     std::uint64_t seed) {
  ScanPoint p;
  p.gamma = gamma;
  p.seed = seed;
  try {
    const TfiParams tfi(gamma);
    sr.seed = derive_seed(seed, 0);
    sampler.seed = derive_seed(seed, 1);
    auto opt = optimize(length, tfi, sr, sampler);
    SamplerConfig eval = sampler;
    eval.seed = derive_seed(seed, 2);
    const auto e = evaluate_energy(opt.params, tfi, eval);
    p.energy = e.mean;
    p.energy_err = e.error;
    try {
      p.exact_energy = exact_ground_energy(length, tfi);
      p.rel_error = std::abs((p.energy - p.exact_energy) / p.exact_energy);
    } catch (const CapabilityError&) {
      p.exact_energy = p.rel_error = std::nan("");
    }
    p.tail = tail_report(opt.params, gamma);
    p.params = std::move(opt.params);
    p.trace = std::move(opt.trace);
    p.ok = true;
  } catch (const Error& e) {
    p.ok = false;
    p.error = e.what();
  }
  return p;
}

std::vector<ScanPoint> gamma_scan(const std::vector<double>& gammas, int length,
                                  const SrConfig& sr, const SamplerConfig& sampler,
                                  std::uint64_t master_seed, const ScanProgress& progress) {
  sr.validate();
  sampler.validate();
  std::vector<ScanPoint> points;
  points.reserve(gammas.size());
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    points.push_back(scan_point(gammas[k], length, sr, sampler, derive_seed(master_seed, k)));
    if (progress) progress(points.back());
  }
  return points;
}

CsvTable tail_csv(const std::vector<ScanPoint>& points, int length) {
  CsvTable t({"gamma", "L", "w_tail", "w_tail_L", "origin_index", "energy", "energy_err",
              "exact_energy", "rel_error", "seed"});
  const double nan = std::nan("");
  for (const auto& p : points) {
    if (p.ok) {
      t.add_row({cell(p.gamma), cell(length), cell(p.tail.w_tail), cell(p.tail.w_tail_times_l),
                 cell(p.tail.origin_index), cell(p.energy), cell(p.energy_err),
                 cell(p.exact_energy), cell(p.rel_error), cell(p.seed)});
    } else {
      t.add_row({cell(p.gamma), cell(length), cell(nan), cell(nan), cell(-1), cell(nan), cell(nan),
                 cell(nan), cell(nan), cell(p.seed)});
    }
  }
  return t;
}

CsvTable profile_csv(const TailReport& report) {
  CsvTable t({"d", "W_d"});
  for (std::size_t d = 0; d < report.w_profile.size(); ++d) {
    t.add_row({cell(static_cast<int>(d)), cell(report.w_profile[d])});
  }
  return t;
}

CsvTable energy_csv(const std::vector<ScanPoint>& points, int length) {
  CsvTable t({"gamma", "L", "energy", "energy_err", "exact_energy", "rel_error", "seed"});
  const double nan = std::nan("");
  for (const auto& p : points) {
    if (p.ok) {
      t.add_row({cell(p.gamma), cell(length), cell(p.energy), cell(p.energy_err),
                 cell(p.exact_energy), cell(p.rel_error), cell(p.seed)});
    } else {
      t.add_row({cell(p.gamma), cell(length), cell(nan), cell(nan), cell(nan), cell(nan),
                 cell(p.seed)});
    }
  }
  return t;
}

}  // namespace rbmtfi
