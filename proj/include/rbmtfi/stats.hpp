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

#include <functional>
#include <span>
#include <vector>

namespace rbmtfi {

/// Mean and error bar of a Monte Carlo observable.
struct McEstimate {
  double mean = 0.0;
  /// Binning error at the coarsest level that still has kMinBins bins.
  double error = 0.0;
  long n_samples = 0;
  /// Error estimate at each binning level; level k uses bins of 2^k samples.
  std::vector<double> level_errors;
  /// Index into level_errors of the reported error.
  int level = 0;
  /// Bin means at the reported level, chain by chain. Used for jackknife.
  std::vector<double> bins;
};

inline constexpr long kMinBins = 32;

/// Binning analysis over several independent chains of equal or unequal
/// length. Bins never straddle chains. The mean is over all samples.
McEstimate binning_analysis(const std::vector<std::vector<double>>& chains);

/// Jackknife over matched bins of two estimates (same chains, same level).
/// `f` maps the pair of bin-excluded means to the derived quantity.
McEstimate jackknife(const McEstimate& a, const McEstimate& b,
                     const std::function<double(double, double)>& f);

}  // namespace rbmtfi
