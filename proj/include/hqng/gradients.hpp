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

#include <span>

#include <Eigen/Dense>

#include "hqng/pauli.hpp"
#include "hqng/sampling.hpp"
#include "hqng/statevector.hpp"

namespace hqng {

/// values[r] = tr(rho_theta P_r), unscaled by the coefficients.
struct TermExpectations {
    Eigen::VectorXd values;
};

/// entries(i, r) = d/d theta_i tr(rho_theta P_r); shape m x v.
struct TermJacobian {
    Eigen::MatrixXd entries;
};

/// Per-term expectations of one prepared state, each routed through the
/// estimator. Identity strings are passed through without sampling noise.
TermExpectations term_expectations(const StateVector &state,
                                   const Hamiltonian &h,
                                   ExpectationEstimator &estimator);
TermExpectations term_expectations(const Ansatz &ansatz, const Hamiltonian &h,
                                   std::span<const double> params,
                                   ExpectationEstimator &estimator);
/// Exact variant.
TermExpectations term_expectations(const Ansatz &ansatz, const Hamiltonian &h,
                                   std::span<const double> params);

/// f = sum_r a_r values[r]
double cost(const Hamiltonian &h, const TermExpectations &te);

/// Exact cost tr(rho_theta H).
double energy(const Ansatz &ansatz, const Hamiltonian &h,
              std::span<const double> params);

/**
 * @brief Per-term Jacobian by the two-point shift rule at +/- pi/2.
 *
 * Prepares exactly 2m circuits and requests v estimates from each, so the
 * estimator is charged 2mv quantities. Rotations are exp(-i theta P / 2)
 * with P^2 = I, which makes the rule exact.
 */
TermJacobian parameter_shift_jacobian(const Ansatz &ansatz,
                                      const Hamiltonian &h,
                                      std::span<const double> params,
                                      ExpectationEstimator &estimator);

/// Exact Jacobian from derivative states: 2 Re <d_i phi|P_r|phi>.
TermJacobian derivative_state_jacobian(const Ansatz &ansatz,
                                       const Hamiltonian &h,
                                       std::span<const double> params);

/// grad f_i = sum_r a_r entries(i, r)
Eigen::VectorXd gradient(const Hamiltonian &h, const TermJacobian &tj);

} // namespace hqng
