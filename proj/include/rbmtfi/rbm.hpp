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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rbmtfi/spin_core.hpp"

namespace rbmtfi {

/// Translationally symmetric RBM with real couplings and no biases.
///
/// Entry d holds W_d, the coupling between visible spin i and hidden spin j
/// with d = (i - j) mod L. The number of hidden spins equals L, so the
/// amplitude is
///
///   Psi(s) = prod_j 2 cosh(theta_j),   theta_j = sum_i W_{i-j} s_i.
///
/// Instances are immutable; per-separation flip factors are precomputed at
/// construction so that a single-flip amplitude ratio costs O(L).
class RbmParams {
 public:
  explicit RbmParams(std::vector<double> w);
  static RbmParams zeros(int length);

  int size() const { return static_cast<int>(w_.size()); }
  int n_hidden() const { return size(); }
  double operator[](int d) const { return w_[static_cast<std::size_t>(d)]; }
  std::span<const double> weights() const { return w_; }

  /// cosh(2 W_d) and sinh(2 W_d) for separations handled by the product
  /// formula; 1 and 0 for the rest, which are listed in large_separations().
  std::span<const double> flip_cosh() const { return flip_cosh_; }
  std::span<const double> flip_sinh() const { return flip_sinh_; }
  std::span<const int> large_separations() const { return large_; }
  /// The same factors indexed by r = -d mod L, so that a flip at `site`
  /// touches hidden unit j through entry (j - site) mod L.
  std::span<const double> flip_cosh_by_offset() const { return rev_cosh_; }
  std::span<const double> flip_sinh_by_offset() const { return rev_sinh_; }
  /// tanh(2 W_d).
  std::span<const double> flip_tanh() const { return flip_tanh_; }

  friend bool operator==(const RbmParams& a, const RbmParams& b) { return a.w_ == b.w_; }

  /// |W_d| above which the flip factor is evaluated in the log domain.
  static constexpr double kProductFormulaLimit = 2.0;

 private:
  std::vector<double> w_;
  std::vector<double> flip_cosh_;
  std::vector<double> flip_sinh_;
  std::vector<double> rev_cosh_;
  std::vector<double> rev_sinh_;
  std::vector<double> flip_tanh_;
  std::vector<int> large_;
};

/// Effective fields theta_j = sum_i W_{i-j} s_i (and their tanh) for the
/// configuration a sampler currently tracks.
class ThetaCache {
 public:
  static constexpr long kRefreshInterval = 10000;
  /// Updates with both old and new |theta_j| below this use the tanh
  /// addition formula instead of calling tanh.
  static constexpr double kAdditionLimit = 4.0;

  ThetaCache(const RbmParams& params, const SpinConfig& config);

  int size() const { return static_cast<int>(theta_.size()); }
  std::span<const double> theta() const { return theta_; }
  std::span<const double> tanh_theta() const { return tanh_; }

  /// Rebuilds theta from scratch.
  void recompute(const RbmParams& params, const SpinConfig& config);

  /// Applies theta_j -= 2 W_{site-j} s_site. `config` is the state before the
  /// flip; the caller flips it afterwards.
  void update(const RbmParams& params, const SpinConfig& config, int site);

  /// Follows a global spin flip: theta -> -theta exactly.
  void negate();

  /// True once kRefreshInterval incremental updates accumulated since the last
  /// full recompute.
  bool needs_refresh() const { return updates_since_refresh_ >= kRefreshInterval; }

 private:
  std::vector<double> theta_;
  std::vector<double> tanh_;
  long updates_since_refresh_ = 0;
};

/// ln(2 cosh x), overflow free.
double log_2cosh(double x);

double log_psi(const RbmParams& params, const SpinConfig& config);

/// ln[Psi(s with `site` flipped) / Psi(s)].
double log_psi_ratio(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                     int site);

/// Psi(s with `site` flipped) / Psi(s); strictly positive.
double psi_ratio(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                 int site);

/// Value-returning form of ThetaCache::update.
ThetaCache update_cache(ThetaCache cache, const RbmParams& params, const SpinConfig& config,
                        int site);

/// O_d = d ln Psi / d W_d = sum_j tanh(theta_j) s_{j+d}.
std::vector<double> log_derivatives(const RbmParams& params, const ThetaCache& cache,
                                    const SpinConfig& config);
void log_derivatives(const ThetaCache& cache, const SpinConfig& config, std::span<double> out);

// Snapshot file: "L <n>" then n lines "d W_d", W_d at 17 significant digits.
void write_snapshot(std::ostream& os, const RbmParams& params);
RbmParams read_snapshot(std::istream& is);
void save_snapshot(const std::filesystem::path& path, const RbmParams& params);
RbmParams load_snapshot(const std::filesystem::path& path);

}  // namespace rbmtfi
