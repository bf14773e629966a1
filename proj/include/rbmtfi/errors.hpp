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

#include <stdexcept>
#include <string>

namespace rbmtfi {

// Error taxonomy. Everything derives from Error so callers that do not care
// about the category can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent sizes, out-of-range sites, malformed input files.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// The request is valid but outside what a routine can do (odd L for the
// fermion formula, L too large for dense diagonalization).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A Monte Carlo estimator produced a non-finite value.
class NumericalFault : public Error {
 public:
  using Error::Error;
};

// SR linear solve failed or the optimizer diverged.
class OptimizationFault : public Error {
 public:
  using Error::Error;
};

// An estimate is inconsistent beyond its own noise (e.g. negative variance).
class StatisticalFault : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but carries no information (all-zero couplings,
// empty averaging window).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbmtfi
