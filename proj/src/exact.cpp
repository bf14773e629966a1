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

#include "rbmtfi/exact.hpp"

#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "rbmtfi/errors.hpp"

namespace rbmtfi {

namespace {

using Basis = std::uint64_t;

// -sum_i s_i s_{i+1} for the configuration encoded in `bits` (bit set = down).
double diagonal_energy_bits(Basis bits, int length) {
  const Basis mask = (Basis{1} << length) - 1;
  const Basis rotated = ((bits >> 1) | (bits << (length - 1))) & mask;
  const int antialigned = std::popcount(bits ^ rotated);
  return -static_cast<double>(length - 2 * antialigned);
}

}  // namespace

EdResult ed_ground_state(int length, const TfiParams& tfi) {
  if (length < 2 || length > kMaxEdLength) {
    throw CapabilityError("dense diagonalization supports 2 <= L <= " +
                          std::to_string(kMaxEdLength) + ", got L=" + std::to_string(length));
  }
  const Basis full = Basis{1} << length;
  const Basis half = full >> 1;
  const Basis mask = full - 1;
  const auto n = static_cast<lapack_int>(half);

  // Representatives r < 2^(L-1) stand for (|r> + |~r>)/sqrt(2).
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Basis r = 0; r < half; ++r) {
    const auto col = static_cast<Eigen::Index>(r);
    h(col, col) = diagonal_energy_bits(r, length);
    for (int i = 0; i < length; ++i) {
      Basis t = r ^ (Basis{1} << i);
      if (t >= half) t ^= mask;
      h(static_cast<Eigen::Index>(t), col) -= tfi.gamma;
    }
  }

  lapack_int found = 0;
  double eigenvalue = 0.0;
  Eigen::VectorXd z(n);
  lapack_int support[2];
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, h.data(), n, 0.0, 0.0,
                                         1, 1, LAPACKE_dlamch('S'), &found, &eigenvalue, z.data(),
                                         n, support);
  if (info != 0 || found != 1) {
    throw CapabilityError("dsyevr failed with info=" + std::to_string(info));
  }
  if (z.sum() < 0.0) z = -z;

  EdResult result;
  result.ground_energy = eigenvalue;
  result.ground_vector.assign(full, 0.0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (Basis r = 0; r < half; ++r) {
    const double a = z(static_cast<Eigen::Index>(r)) * inv_sqrt2;
    result.ground_vector[r] = a;
    result.ground_vector[r ^ mask] = a;
  }
  return result;
}

double free_fermion_energy(int length, const TfiParams& tfi) {
  if (length < 2 || length % 2 != 0) {
    throw CapabilityError("free-fermion energy: even L required, got L=" + std::to_string(length));
  }
  const double g = tfi.gamma;
  double sum = 0.0;
  double compensation = 0.0;
  for (int k = 0; k < length; ++k) {
    const double momentum = (2.0 * k + 1.0) * std::numbers::pi / length;
    const double term = std::sqrt(1.0 + g * g - 2.0 * g * std::cos(momentum)) - compensation;
    const double next = sum + term;
    compensation = (next - sum) - term;
    sum = next;
  }
  return -sum;
}

double exact_ground_energy(int length, const TfiParams& tfi) {
  if (length % 2 == 0) return free_fermion_energy(length, tfi);
  if (length <= kMaxEdLength) return ed_ground_state(length, tfi).ground_energy;
  throw CapabilityError("no exact oracle for odd L=" + std::to_string(length) + " > " +
                        std::to_string(kMaxEdLength));
}

void apply_hamiltonian(int length, const TfiParams& tfi, std::span<const double> in,
                       std::span<double> out) {
  if (length < 1 || length > 20) throw CapabilityError("apply_hamiltonian supports L <= 20");
  const Basis full = Basis{1} << length;
  if (in.size() != full || out.size() != full) {
    throw ConfigurationError("apply_hamiltonian: vectors must have 2^L entries");
  }
  for (Basis s = 0; s < full; ++s) {
    double acc = diagonal_energy_bits(s, length) * in[s];
    for (int i = 0; i < length; ++i) acc -= tfi.gamma * in[s ^ (Basis{1} << i)];
    out[s] = acc;
  }
}

ExactExpectations exact_expectations(const RbmParams& params, const TfiParams& tfi) {
  const int length = params.size();
  if (length > kMaxEnumerationLength) {
    throw CapabilityError("exact_expectations enumerates 2^L states; L <= " +
                          std::to_string(kMaxEnumerationLength) + " required, got L=" +
                          std::to_string(length));
  }
  const Basis full = Basis{1} << length;

  std::vector<double> log_amp(full);
  for (Basis s = 0; s < full; ++s) log_amp[s] = log_psi(params, SpinConfig::from_bits(s, length));
  const double max_log = *std::max_element(log_amp.begin(), log_amp.end());

  Eigen::VectorXd o_sum = Eigen::VectorXd::Zero(length);
  Eigen::MatrixXd oo_sum = Eigen::MatrixXd::Zero(length, length);
  Eigen::VectorXd eo_sum = Eigen::VectorXd::Zero(length);
  Eigen::VectorXd o(length);
  double norm = 0.0, e_sum = 0.0, e2_sum = 0.0;

  for (Basis s = 0; s < full; ++s) {
    const auto config = SpinConfig::from_bits(s, length);
    double eloc = diagonal_energy_bits(s, length);
    for (int i = 0; i < length; ++i) {
      eloc -= tfi.gamma * std::exp(log_amp[s ^ (Basis{1} << i)] - log_amp[s]);
    }
    const ThetaCache cache(params, config);
    log_derivatives(cache, config, std::span<double>(o.data(), static_cast<std::size_t>(length)));

    const double p = std::exp(2.0 * (log_amp[s] - max_log));
    norm += p;
    e_sum += p * eloc;
    e2_sum += p * eloc * eloc;
    o_sum += p * o;
    oo_sum.selfadjointView<Eigen::Lower>().rankUpdate(o, p);
    eo_sum += (p * eloc) * o;
  }

  ExactExpectations out;
  out.moments.energy = e_sum / norm;
  out.moments.o_mean = o_sum / norm;
  out.moments.oo_mean = oo_sum.selfadjointView<Eigen::Lower>();
  out.moments.oo_mean /= norm;
  out.moments.eo_mean = eo_sum / norm;
  out.eloc_variance = e2_sum / norm - out.moments.energy * out.moments.energy;
  out.s_matrix = out.moments.covariance();
  out.f_vector = out.moments.force();
  return out;
}

}  // namespace rbmtfi
