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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rbmtfi/moments.hpp"
#include "rbmtfi/rbm.hpp"
#include "rbmtfi/spin_core.hpp"

namespace rbmtfi {

inline constexpr int kMaxEdLength = 14;
inline constexpr int kMaxEnumerationLength = 12;

struct EdResult {
  double ground_energy = 0.0;
  /// Amplitudes indexed by SpinConfig::to_bits(); unit norm, nonnegative.
  std::vector<double> ground_vector;
};

/// Lowest eigenpair of the periodic TFI chain by dense diagonalization.
///
/// For gamma >= 0 a ground state lies in the sector even under the global
/// spin flip prod_i sx_i, so only that 2^(L-1) dimensional block is built
/// and diagonalized. The eigenvector is expanded back to all 2^L basis states.
EdResult ed_ground_state(int length, const TfiParams& tfi);

/// Ground-state energy from the free-fermion spectrum,
/// E0 = -sum_n sqrt(1 + g^2 - 2 g cos k_n), k_n = (2n + 1) pi / L.
/// Requires even L.
double free_fermion_energy(int length, const TfiParams& tfi);

/// Best available exact energy: free fermions for even L, ED for small odd L.
double exact_ground_energy(int length, const TfiParams& tfi);

/// out = H in, basis indexed as in EdResult::ground_vector. L <= 20.
void apply_hamiltonian(int length, const TfiParams& tfi, std::span<const double> in,
                       std::span<double> out);

struct ExactExpectations {
  SrMoments moments;
  double eloc_variance = 0.0;
  Eigen::MatrixXd s_matrix;
  Eigen::VectorXd f_vector;

  double energy() const { return moments.energy; }
};

/// Noise-free SR inputs by summing over all 2^L configurations with weights
/// Psi(s)^2. Local energies are formed from the enumerated amplitude table
/// rather than the incremental ratio kernel.
ExactExpectations exact_expectations(const RbmParams& params, const TfiParams& tfi);

}  // namespace rbmtfi
