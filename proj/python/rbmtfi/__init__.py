# Copyright 2026 The rbmtfi Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the rbmtfi core: exact oracles, optimization, analysis and thermal sampling."""

from ._core import (
    ConfigurationError,
    Error,
    align_origin,
    ed_ground_energy,
    exact_ground_energy,
    free_fermion_energy,
    log_psi,
    optimize,
    tail_window,
    temperature_scan,
    w_tail,
)

__all__ = [
    "ConfigurationError",
    "Error",
    "align_origin",
    "ed_ground_energy",
    "exact_ground_energy",
    "free_fermion_energy",
    "log_psi",
    "optimize",
    "tail_window",
    "temperature_scan",
    "w_tail",
]
