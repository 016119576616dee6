// Copyright 2026 The hqng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "hqng/metrics.hpp"
#include "hqng/pauli.hpp"
#include "hqng/statevector.hpp"

// Brute-force references used to check the fast paths. Nothing here is on
// an optimizer's hot path.
namespace hqng::oracle {

struct GroundSolution {
    double energy = 0.0;
    /// Eigenvalues within kDegeneracyTolerance * max(1, ||H||) of the minimum.
    std::size_t degeneracy = 0;
    StateVector state{1};
};

constexpr double kDegeneracyTolerance = 1e-8;
constexpr std::size_t kDensityQubitLimit = 6;

/// Full Hermitian eigensolve of dense_matrix(h); n <= 12.
GroundSolution ground_state(const Hamiltonian &h);

/// Central differences of the exact energy.
Eigen::VectorXd fd_gradient(const Ansatz &ansatz, const Hamiltonian &h,
                            std::span<const double> params,
                            double h_step = 1e-5);

/**
 * @brief A as half the Hessian of 1 - |<phi(theta)|phi(theta + delta)>|^2.
 *
 * Diagonal entries use the three-point stencil and off-diagonal entries the
 * four-point mixed stencil, both with step h_step.
 */
MetricTensor fd_metric(const Ansatz &ansatz, std::span<const double> params,
                       double h_step = 1e-3);

/// |phi><phi| as a dense matrix; n <= 6.
Eigen::MatrixXcd density_matrix(const StateVector &state);

/// d rho / d theta_i by central differences of the dense density matrix.
std::vector<Eigen::MatrixXcd>
density_derivatives(const Ansatz &ansatz, std::span<const double> params,
                    double h_step = 1e-5);

/// 1/2 tr(d_i rho d_j rho) from density_derivatives; n <= 6.
Eigen::MatrixXd dense_hs_metric(const Ansatz &ansatz,
                                std::span<const double> params,
                                double h_step = 1e-5);

/// The 2x2 matrix of I, X, Y or Z.
Eigen::Matrix2cd single_qubit_pauli(char letter);

/// Kronecker product of single-qubit matrices, qubit 0 leftmost.
Eigen::MatrixXcd kron_pauli(const PauliTerm &p);

/// Unitary of one gate on n qubits, assembled from Kronecker products.
Eigen::MatrixXcd dense_gate_matrix(const Gate &gate, std::size_t n_qubits,
                                   std::span<const double> params);

/// Product of dense_gate_matrix over the circuit applied to |0...0>.
Eigen::VectorXcd dense_prepare_state(const Ansatz &ansatz,
                                     std::span<const double> params);

} // namespace hqng::oracle
