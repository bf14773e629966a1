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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rbmtfi {

/// Periodic index: wraps any integer into [0, n).
inline int wrap_index(long long i, int n) {
  const long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Configuration of L Ising spins (each exactly -1 or +1) on a periodic chain.
class SpinConfig {
 public:
  using value_type = std::int8_t;

  /// All spins up.
  explicit SpinConfig(int length);
  SpinConfig(std::initializer_list<int> spins);
  explicit SpinConfig(std::span<const int> spins);

  /// Decodes bit k of `bits` as spin k: 0 -> +1, 1 -> -1.
  static SpinConfig from_bits(std::uint64_t bits, int length);
  std::uint64_t to_bits() const;

  int size() const { return static_cast<int>(spins_.size()); }
  int operator[](int i) const { return spins_[static_cast<std::size_t>(i)]; }
  /// Periodic access.
  int at(long long i) const { return spins_[static_cast<std::size_t>(wrap_index(i, size()))]; }

  void flip(int site);
  void flip_all();
  SpinConfig operator-() const;

  std::span<const value_type> values() const { return spins_; }
  std::vector<int> to_vector() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::vector<value_type> spins_;
};

/// Transverse-field Ising chain H = -sum_i s_i s_{i+1} - gamma sum_i sx_i.
struct TfiParams {
  double gamma = 1.0;

  explicit TfiParams(double g);
};

/// Diagonal (Ising) part of H: -sum_i s_i s_{i+1} with periodic wrap.
double diagonal_energy(const SpinConfig& config);

/// Cyclic translation, result[i] = config[i + s mod L].
SpinConfig shift(const SpinConfig& config, long long s);

}  // namespace rbmtfi
