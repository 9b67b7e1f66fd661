# Copyright 2026 The mopdim Authors
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

"""Metric dimension algorithms for maximal outerplanar graphs."""

try:
    # Installed layout: the extension lives inside the package.
    from mopdim._mopdim import (  # noqa: F401
        MopError,
        MopGraph,
        brute_force_beta,
        brute_force_lambda,
        build_resolving_set,
        decide_dim_two,
        distance_matrix,
        enumerate_mops,
        fan,
        fan_basis,
        fan_dimension,
        grid_embedding,
        is_locating_dominating,
        is_mop_zigzag,
        is_resolving,
        random_mop,
        recognize,
        zigzag,
    )
except ImportError:
    # Build-tree layout: the extension sits on PYTHONPATH.
    from _mopdim import (  # noqa: F401
        MopError,
        MopGraph,
        brute_force_beta,
        brute_force_lambda,
        build_resolving_set,
        decide_dim_two,
        distance_matrix,
        enumerate_mops,
        fan,
        fan_basis,
        fan_dimension,
        grid_embedding,
        is_locating_dominating,
        is_mop_zigzag,
        is_resolving,
        random_mop,
        recognize,
        zigzag,
    )

__all__ = [
    "MopError",
    "MopGraph",
    "brute_force_beta",
    "brute_force_lambda",
    "build_resolving_set",
    "decide_dim_two",
    "distance_matrix",
    "enumerate_mops",
    "fan",
    "fan_basis",
    "fan_dimension",
    "grid_embedding",
    "is_locating_dominating",
    "is_mop_zigzag",
    "is_resolving",
    "random_mop",
    "recognize",
    "zigzag",
]
