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

#include "rbmtfi/spin_core.hpp"

#include <cmath>
#include <string>

#include "rbmtfi/errors.hpp"

namespace rbmtfi {

namespace {

std::int8_t checked_spin(int s) {
  if (s != 1 && s != -1) {
    throw ConfigurationError("spin values must be -1 or +1, got " + std::to_string(s));
  }
  return static_cast<std::int8_t>(s);
}

}  // namespace

SpinConfig::SpinConfig(int length) {
  if (length < 1) throw ConfigurationError("chain length must be positive");
  spins_.assign(static_cast<std::size_t>(length), 1);
}

SpinConfig::SpinConfig(std::initializer_list<int> spins) {
  if (spins.size() == 0) throw ConfigurationError("chain length must be positive");
  spins_.reserve(spins.size());
  for (int s : spins) spins_.push_back(checked_spin(s));
}

SpinConfig::SpinConfig(std::span<const int> spins) {
  if (spins.empty()) throw ConfigurationError("chain length must be positive");
  spins_.reserve(spins.size());
  for (int s : spins) spins_.push_back(checked_spin(s));
}

SpinConfig SpinConfig::from_bits(std::uint64_t bits, int length) {
  if (length < 1 || length > 64) throw ConfigurationError("from_bits needs 1 <= L <= 64");
  SpinConfig c(length);
  for (int i = 0; i < length; ++i) {
    if ((bits >> i) & 1u) c.spins_[static_cast<std::size_t>(i)] = -1;
  }
  return c;
}

std::uint64_t SpinConfig::to_bits() const {
  if (size() > 64) throw ConfigurationError("to_bits needs L <= 64");
  std::uint64_t bits = 0;
  for (int i = 0; i < size(); ++i) {
    if (spins_[static_cast<std::size_t>(i)] < 0) bits |= (std::uint64_t{1} << i);
  }
  return bits;
}

void SpinConfig::flip(int site) {
  if (site < 0 || site >= size()) {
    throw ConfigurationError("site " + std::to_string(site) + " out of range");
  }
  auto& s = spins_[static_cast<std::size_t>(site)];
  s = static_cast<std::int8_t>(-s);
}

void SpinConfig::flip_all() {
  for (auto& s : spins_) s = static_cast<std::int8_t>(-s);
}

SpinConfig SpinConfig::operator-() const {
  SpinConfig c = *this;
  c.flip_all();
  return c;
}

std::vector<int> SpinConfig::to_vector() const { return {spins_.begin(), spins_.end()}; }

TfiParams::TfiParams(double g) : gamma(g) {
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw ConfigurationError("transverse field gamma must be finite and >= 0");
  }
}

double diagonal_energy(const SpinConfig& config) {
  const int n = config.size();
  int sum = 0;
  for (int i = 0; i < n; ++i) sum += config[i] * config[(i + 1) % n];
  return -static_cast<double>(sum);
}

SpinConfig shift(const SpinConfig& config, long long s) {
  const int n = config.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = config.at(i + s);
  return SpinConfig(std::span<const int>(out));
}

}  // namespace rbmtfi
