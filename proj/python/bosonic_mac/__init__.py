# Copyright 2026 The bosonic_mac Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Capacity regions of Bosonic multiple-access channels (rates in nats)."""

from ._core import (
    DomainError,
    FeasibilityError,
    NumericError,
    RateRegion,
    TruncationError,
    UnphysicalStateError,
    g,
    gaussian_entropy,
    gaussian_mac_region,
    heterodyne_region,
    homodyne_region,
    hsh_region,
    modulated_average_entropy,
    noise_capacity,
    optimal_region,
    optimal_squeeze,
    outer_bound_region,
    rmax_individual,
    run_cli,
    squeezed_homodyne_rate,
    thermal_entropy_numeric,
)

__all__ = [
    "DomainError",
    "FeasibilityError",
    "NumericError",
    "RateRegion",
    "TruncationError",
    "UnphysicalStateError",
    "g",
    "gaussian_entropy",
    "gaussian_mac_region",
    "heterodyne_region",
    "homodyne_region",
    "hsh_region",
    "modulated_average_entropy",
    "noise_capacity",
    "optimal_region",
    "optimal_squeeze",
    "outer_bound_region",
    "rmax_individual",
    "run_cli",
    "squeezed_homodyne_rate",
    "thermal_entropy_numeric",
]

__version__ = "0.1.0"
