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

#include <Eigen/Dense>

namespace rbmtfi {

/// Raw |Psi|^2-weighted averages consumed by stochastic reconfiguration:
/// <E_loc>, <O_d>, <O_d O_d'> and <E_loc O_d>.
struct SrMoments {
  double energy = 0.0;
  Eigen::VectorXd o_mean;
  Eigen::MatrixXd oo_mean;
  Eigen::VectorXd eo_mean;

  int size() const { return static_cast<int>(o_mean.size()); }

  /// S_dd' = <O_d O_d'> - <O_d><O_d'>
  Eigen::MatrixXd covariance() const { return oo_mean - o_mean * o_mean.transpose(); }
  /// F_d = <E_loc O_d> - <E_loc><O_d>
  Eigen::VectorXd force() const { return eo_mean - energy * o_mean; }
};

}  // namespace rbmtfi
