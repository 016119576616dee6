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

#include "hqng/gradients.hpp"

#include <numbers>
#include <variant>
#include <vector>

#include "hqng/errors.hpp"

namespace hqng {

namespace {

void check_qubits(const Ansatz &ansatz, const Hamiltonian &h) {
    if (ansatz.n_qubits() != h.n_qubits()) {
        throw DimensionError("ansatz acts on " +
                             std::to_string(ansatz.n_qubits()) +
                             " qubits but Hamiltonian on " +
                             std::to_string(h.n_qubits()));
    }
}

} // namespace

TermExpectations term_expectations(const StateVector &state,
                                   const Hamiltonian &h,
                                   ExpectationEstimator &estimator) {
    if (state.n_qubits() != h.n_qubits()) {
        throw DimensionError("term_expectations: qubit count mismatch");
    }
    TermExpectations te{Eigen::VectorXd(h.size())};
    for (std::size_t r = 0; r < h.size(); ++r) {
        const auto &p = h[r].term;
        const auto idx = static_cast<Eigen::Index>(r);
        te.values[idx] = p.is_identity()
                             ? estimator.pass_through(1.0)
                             : estimator.estimate(expectation(state, p));
    }
    return te;
}

TermExpectations term_expectations(const Ansatz &ansatz, const Hamiltonian &h,
                                   std::span<const double> params,
                                   ExpectationEstimator &estimator) {
    check_qubits(ansatz, h);
    return term_expectations(prepare_state(ansatz, params), h, estimator);
}

TermExpectations term_expectations(const Ansatz &ansatz, const Hamiltonian &h,
                                   std::span<const double> params) {
    auto estimator = ExpectationEstimator::exact();
    return term_expectations(ansatz, h, params, estimator);
}

double cost(const Hamiltonian &h, const TermExpectations &te) {
    if (static_cast<std::size_t>(te.values.size()) != h.size()) {
        throw DimensionError("cost: expectation count does not match terms");
    }
    return h.coefficients().dot(te.values);
}

double energy(const Ansatz &ansatz, const Hamiltonian &h,
              std::span<const double> params) {
    return cost(h, term_expectations(ansatz, h, params));
}

TermJacobian parameter_shift_jacobian(const Ansatz &ansatz,
                                      const Hamiltonian &h,
                                      std::span<const double> params,
                                      ExpectationEstimator &estimator) {
    check_qubits(ansatz, h);
    if (params.size() != ansatz.n_params()) {
        throw DimensionError("parameter_shift_jacobian: parameter count");
    }
    const std::size_t m = ansatz.n_params();
    for (std::size_t i = 0; i < m; ++i) {
        // Throws for parameters shared across gates.
        (void)ansatz.generating_gate(i);
    }
    TermJacobian tj{Eigen::MatrixXd(m, h.size())};
    std::vector<double> shifted(params.begin(), params.end());
    constexpr double kShift = std::numbers::pi / 2.0;
    for (std::size_t i = 0; i < m; ++i) {
        shifted[i] = params[i] + kShift;
        const auto plus = term_expectations(ansatz, h, shifted, estimator);
        shifted[i] = params[i] - kShift;
        const auto minus = term_expectations(ansatz, h, shifted, estimator);
        shifted[i] = params[i];
        tj.entries.row(static_cast<Eigen::Index>(i)) =
            0.5 * (plus.values - minus.values).transpose();
    }
    return tj;
}

TermJacobian derivative_state_jacobian(const Ansatz &ansatz,
                                       const Hamiltonian &h,
                                       std::span<const double> params) {
    check_qubits(ansatz, h);
    const auto state = prepare_state(ansatz, params);
    const auto derivs = derivative_states(ansatz, params);
    TermJacobian tj{Eigen::MatrixXd(derivs.size(), h.size())};
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        for (std::size_t r = 0; r < h.size(); ++r) {
            tj.entries(static_cast<Eigen::Index>(i),
                       static_cast<Eigen::Index>(r)) =
                2.0 * pauli_matrix_element(derivs[i], h[r].term, state).real();
        }
    }
    return tj;
}

Eigen::VectorXd gradient(const Hamiltonian &h, const TermJacobian &tj) {
    if (static_cast<std::size_t>(tj.entries.cols()) != h.size()) {
        throw DimensionError("gradient: Jacobian columns do not match terms");
    }
    return tj.entries * h.coefficients();
}

} // namespace hqng
