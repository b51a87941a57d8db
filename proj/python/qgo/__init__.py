# Copyright 2026 The qgo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gate optimization for dissipative quantum systems.

Thin Python surface over the C++ core: model builders, Lindblad
propagation, reduced state families, fidelity functionals, channel
verification and the Krotov optimizer driven by config documents.
"""

from qgo._core import (
    CollapseOp,
    LindbladModel,
    ModelBundle,
    OptimizationResult,
    RydbergParams,
    StateSet,
    SubspaceEmbedding,
    TransmonParams,
    build_rydberg,
    build_state_set,
    build_transmon,
    channel_is_unitary,
    choi_matrix,
    cphase_target,
    dynamical_map,
    eval_j_dist,
    eval_j_t,
    f_avg,
    f_avg_monte_carlo,
    ghz,
    haar_unitary,
    is_unital,
    maximally_mixed_state,
    mhz,
    optimize,
    ordered_spectrum_state,
    propagate,
    propagate_edges,
    random_kraus_channel,
    rate_from_us,
    resolve_config,
    run_verification_battery,
    set_kind_names,
    sqrt_iswap_target,
    to_mhz,
    totally_rotated_state,
)

__all__ = [
    "CollapseOp",
    "LindbladModel",
    "ModelBundle",
    "OptimizationResult",
    "RydbergParams",
    "StateSet",
    "SubspaceEmbedding",
    "TransmonParams",
    "build_rydberg",
    "build_state_set",
    "build_transmon",
    "channel_is_unitary",
    "choi_matrix",
    "cphase_target",
    "dynamical_map",
    "eval_j_dist",
    "eval_j_t",
    "f_avg",
    "f_avg_monte_carlo",
    "ghz",
    "haar_unitary",
    "is_unital",
    "maximally_mixed_state",
    "mhz",
    "optimize",
    "ordered_spectrum_state",
    "propagate",
    "propagate_edges",
    "random_kraus_channel",
    "rate_from_us",
    "resolve_config",
    "run_verification_battery",
    "set_kind_names",
    "sqrt_iswap_target",
    "to_mhz",
    "totally_rotated_state",
]
