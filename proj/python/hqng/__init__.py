# Copyright 2026 The hqng Authors
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

"""Statevector VQE with Hamiltonian-aware natural gradients."""

from ._hqng import (
    CHEMICAL_ACCURACY,
    Ansatz,
    DimensionError,
    Hamiltonian,
    ParseError,
    SingularMetricError,
    energy,
    estimations_per_step,
    fubini_study,
    full_pauli_pullback,
    gradient,
    ground_state,
    hamiltonian_aware_metric,
    load_ansatz,
    load_hamiltonian,
    op_vqite_metric,
    parse_ansatz,
    parse_hamiltonian,
    run,
    state,
)

__all__ = [
    "CHEMICAL_ACCURACY",
    "Ansatz",
    "DimensionError",
    "Hamiltonian",
    "ParseError",
    "SingularMetricError",
    "energy",
    "estimations_per_step",
    "fubini_study",
    "full_pauli_pullback",
    "gradient",
    "ground_state",
    "hamiltonian_aware_metric",
    "load_ansatz",
    "load_hamiltonian",
    "op_vqite_metric",
    "parse_ansatz",
    "parse_hamiltonian",
    "run",
    "state",
]
