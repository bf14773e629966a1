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

#include "rbmtfi/stats.hpp"

#include <cmath>

#include "rbmtfi/errors.hpp"

namespace rbmtfi {

namespace {

// Pooled bins of size 2^level, each bin inside one chain.
std::vector<double> make_bins(const std::vector<std::vector<double>>& chains, int level) {
  const std::size_t width = std::size_t{1} << level;
  std::vector<double> bins;
  for (const auto& c : chains) {
    const std::size_t n_bins = c.size() / width;
    for (std::size_t b = 0; b < n_bins; ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < width; ++k) s += c[b * width + k];
      bins.push_back(s / static_cast<double>(width));
    }
  }
  return bins;
}

double error_of_mean(const std::vector<double>& bins) {
  const auto n = static_cast<double>(bins.size());
  if (bins.size() < 2) return 0.0;
  double mean = 0.0;
  for (double b : bins) mean += b;
  mean /= n;
  double ss = 0.0;
  for (double b : bins) ss += (b - mean) * (b - mean);
  return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

McEstimate binning_analysis(const std::vector<std::vector<double>>& chains) {
  McEstimate est;
  double sum = 0.0;
  for (const auto& c : chains) {
    for (double x : c) sum += x;
    est.n_samples += static_cast<long>(c.size());
  }
  if (est.n_samples == 0) throw StatisticalFault("binning analysis of an empty series");
  est.mean = sum / static_cast<double>(est.n_samples);

  for (int level = 0;; ++level) {
    auto bins = make_bins(chains, level);
    if (static_cast<long>(bins.size()) < kMinBins) {
      if (level == 0) {
        // Too short for binning; report the naive error.
        est.level_errors.push_back(error_of_mean(bins));
        est.error = est.level_errors.back();
        est.bins = std::move(bins);
      }
      break;
    }
    est.level_errors.push_back(error_of_mean(bins));
    est.level = level;
    est.error = est.level_errors.back();
    est.bins = std::move(bins);
  }
  return est;
}

McEstimate jackknife(const McEstimate& a, const McEstimate& b,
                     const std::function<double(double, double)>& f) {
  const std::size_t n = a.bins.size();
  if (n != b.bins.size() || n < 2) {
    throw StatisticalFault("jackknife needs matched bin sets with at least two bins");
  }
  double sum_a = 0.0, sum_b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_a += a.bins[k];
    sum_b += b.bins[k];
  }
  const auto nd = static_cast<double>(n);
  std::vector<double> leave_out(n);
  double mean_lo = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    leave_out[k] = f((sum_a - a.bins[k]) / (nd - 1.0), (sum_b - b.bins[k]) / (nd - 1.0));
    mean_lo += leave_out[k];
  }
  mean_lo /= nd;
  double ss = 0.0;
  for (double v : leave_out) ss += (v - mean_lo) * (v - mean_lo);

  McEstimate out;
  out.mean = f(a.mean, b.mean);
  out.error = std::sqrt((nd - 1.0) / nd * ss);
  out.n_samples = a.n_samples;
  out.level_errors = {out.error};
  return out;
}

}  // namespace rbmtfi
