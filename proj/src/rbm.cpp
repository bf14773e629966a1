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

#include "rbmtfi/rbm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rbmtfi/errors.hpp"
#include "rbmtfi/io.hpp"

namespace rbmtfi {

namespace {

void check_sizes(const RbmParams& params, const SpinConfig& config) {
  if (params.size() != config.size()) {
    throw ConfigurationError("parameter length " + std::to_string(params.size()) +
                             " does not match chain length " + std::to_string(config.size()));
  }
}

void check_site(int site, int n) {
  if (site < 0 || site >= n) {
    throw ConfigurationError("site " + std::to_string(site) + " out of range [0, " +
                             std::to_string(n) + ")");
  }
}

}  // namespace

RbmParams::RbmParams(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw ConfigurationError("RBM needs at least one coupling");
  const auto n = w_.size();
  flip_cosh_.resize(n);
  flip_sinh_.resize(n);
  flip_tanh_.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    if (!std::isfinite(w_[d])) throw ConfigurationError("RBM couplings must be finite");
    if (std::abs(w_[d]) <= kProductFormulaLimit) {
      flip_cosh_[d] = std::cosh(2.0 * w_[d]);
      flip_sinh_[d] = std::sinh(2.0 * w_[d]);
    } else {
      flip_cosh_[d] = 1.0;
      flip_sinh_[d] = 0.0;
      large_.push_back(static_cast<int>(d));
    }
    flip_tanh_[d] = std::tanh(2.0 * w_[d]);
  }
  rev_cosh_.resize(n);
  rev_sinh_.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    rev_cosh_[r] = flip_cosh_[(n - r) % n];
    rev_sinh_[r] = flip_sinh_[(n - r) % n];
  }
}

RbmParams RbmParams::zeros(int length) {
  if (length < 1) throw ConfigurationError("chain length must be positive");
  return RbmParams(std::vector<double>(static_cast<std::size_t>(length), 0.0));
}

ThetaCache::ThetaCache(const RbmParams& params, const SpinConfig& config) {
  recompute(params, config);
}

void ThetaCache::recompute(const RbmParams& params, const SpinConfig& config) {
  check_sizes(params, config);
  const int n = config.size();
  theta_.assign(static_cast<std::size_t>(n), 0.0);
  tanh_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += params[wrap_index(i - j, n)] * config[i];
    theta_[static_cast<std::size_t>(j)] = t;
    tanh_[static_cast<std::size_t>(j)] = std::tanh(t);
  }
  updates_since_refresh_ = 0;
}

void ThetaCache::update(const RbmParams& params, const SpinConfig& config, int site) {
  const int n = size();
  check_site(site, n);
  const double s = config[site];
  const double two_s = 2.0 * s;
  const double* ft = params.flip_tanh().data();
  for (int j = 0; j < n; ++j) {
    int d = site - j;
    if (d < 0) d += n;
    auto& t = theta_[static_cast<std::size_t>(j)];
    auto& th = tanh_[static_cast<std::size_t>(j)];
    const double next = t - two_s * params[d];
    if (std::abs(t) < kAdditionLimit && std::abs(next) < kAdditionLimit) {
      const double a = s * ft[d];
      th = (th - a) / (1.0 - th * a);
    } else {
      th = std::tanh(next);
    }
    t = next;
  }
  ++updates_since_refresh_;
}

void ThetaCache::negate() {
  for (auto& t : theta_) t = -t;
  for (auto& t : tanh_) t = -t;
}

double log_2cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

double log_psi(const RbmParams& params, const SpinConfig& config) {
  check_sizes(params, config);
  const ThetaCache cache(params, config);
  double sum = 0.0;
  for (double t : cache.theta()) sum += log_2cosh(t);
  return sum;
}

namespace {

// Running log of a product of factors in [e^-4, e^4]. Four lanes keep the
// multiplications independent; the lanes are folded into the log after at
// most 64 factors, far below overflow.
struct LogProduct {
  double lane[4] = {1.0, 1.0, 1.0, 1.0};
  double log_sum = 0.0;
  int count = 0;

  void fold() {
    log_sum += std::log((lane[0] * lane[1]) * (lane[2] * lane[3]));
    lane[0] = lane[1] = lane[2] = lane[3] = 1.0;
    count = 0;
  }

  // Multiplies in ch[k] - s * t[k] * sh[k] for k in [0, len).
  void add(const double* t, const double* ch, const double* sh, double s, int len) {
    int k = 0;
    while (k < len) {
      const int chunk = std::min(len - k, 64 - count);
      int m = k;
      for (; m + 4 <= k + chunk; m += 4) {
        for (int q = 0; q < 4; ++q) lane[q] *= ch[m + q] - s * t[m + q] * sh[m + q];
      }
      for (; m < k + chunk; ++m) lane[0] *= ch[m] - s * t[m] * sh[m];
      count += chunk;
      k += chunk;
      if (count == 64) fold();
    }
  }
};

}  // namespace

// Each factor cosh(theta_j - delta)/cosh(theta_j) is written as
// cosh(delta) - tanh(theta_j) sinh(delta), which stays well conditioned for
// |delta| <= 2 * kProductFormulaLimit. Larger couplings go through log_2cosh.
double log_psi_ratio(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                     int site) {
  const int n = config.size();
  check_site(site, n);
  if (cache.size() != n || params.size() != n) {
    throw ConfigurationError("log_psi_ratio: inconsistent lengths");
  }
  const double s = config[site];
  const double* t = cache.tanh_theta().data();
  const double* ch = params.flip_cosh_by_offset().data();
  const double* sh = params.flip_sinh_by_offset().data();

  // hidden unit j uses offset (j - site) mod n
  LogProduct acc;
  acc.add(t, ch + (n - site) % n, sh + (n - site) % n, s, site);
  acc.add(t + site, ch, sh, s, n - site);
  acc.fold();
  double log_sum = acc.log_sum;

  const auto theta = cache.theta();
  for (int d : params.large_separations()) {
    const int j = wrap_index(site - d, n);
    const double th = theta[static_cast<std::size_t>(j)];
    log_sum += log_2cosh(th - 2.0 * s * params[d]) - log_2cosh(th);
  }
  return log_sum;
}

double psi_ratio(const RbmParams& params, const ThetaCache& cache, const SpinConfig& config,
                 int site) {
  return std::exp(log_psi_ratio(params, cache, config, site));
}

ThetaCache update_cache(ThetaCache cache, const RbmParams& params, const SpinConfig& config,
                        int site) {
  cache.update(params, config, site);
  return cache;
}

void log_derivatives(const ThetaCache& cache, const SpinConfig& config, std::span<double> out) {
  const int n = config.size();
  if (cache.size() != n || static_cast<int>(out.size()) != n) {
    throw ConfigurationError("log_derivatives: inconsistent lengths");
  }
  const double* t = cache.tanh_theta().data();
  const auto spins = config.values();
  for (int d = 0; d < n; ++d) {
    double acc = 0.0;
    // j + d wraps once at j = n - d
    for (int j = 0; j < n - d; ++j) acc += t[j] * spins[static_cast<std::size_t>(j + d)];
    for (int j = n - d; j < n; ++j) acc += t[j] * spins[static_cast<std::size_t>(j + d - n)];
    out[static_cast<std::size_t>(d)] = acc;
  }
}

std::vector<double> log_derivatives(const RbmParams& params, const ThetaCache& cache,
                                    const SpinConfig& config) {
  check_sizes(params, config);
  std::vector<double> out(static_cast<std::size_t>(config.size()));
  log_derivatives(cache, config, out);
  return out;
}

void write_snapshot(std::ostream& os, const RbmParams& params) {
  os << "L " << params.size() << '\n';
  for (int d = 0; d < params.size(); ++d) os << d << ' ' << format_real(params[d]) << '\n';
}

RbmParams read_snapshot(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ConfigurationError("snapshot: missing header line");
  std::istringstream header(line);
  std::string tag;
  long long length = 0;
  if (!(header >> tag >> length) || tag != "L" || length < 1) {
    throw ConfigurationError("snapshot: header must read 'L <int>', got '" + line + "'");
  }
  std::vector<double> w(static_cast<std::size_t>(length));
  for (long long k = 0; k < length; ++k) {
    if (!std::getline(is, line)) {
      throw ConfigurationError("snapshot: expected " + std::to_string(length) + " couplings, got " +
                               std::to_string(k));
    }
    std::istringstream row(line);
    std::string d_text, w_text;
    if (!(row >> d_text >> w_text) || parse_integer(d_text) != k) {
      throw ConfigurationError("snapshot: malformed line '" + line + "'");
    }
    w[static_cast<std::size_t>(k)] = parse_real(w_text);
  }
  return RbmParams(std::move(w));
}

void save_snapshot(const std::filesystem::path& path, const RbmParams& params) {
  std::ostringstream os;
  write_snapshot(os, params);
  write_file_atomic(path, os.str());
}

RbmParams load_snapshot(const std::filesystem::path& path) {
  std::istringstream is(read_file(path));
  return read_snapshot(is);
}

}  // namespace rbmtfi
