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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hqng/gradients.hpp"
#include "hqng/metrics.hpp"
#include "hqng/pauli.hpp"
#include "hqng/sampling.hpp"
#include "hqng/statevector.hpp"

namespace hqng {

/**
 * @brief Pauli strings needed to evaluate tr(rho {P_r, H}) for every term.
 *
 * {P_r, P_s} is 2 P_r P_s when the strings commute and zero otherwise, so
 * each anticommutator expands into at most v strings. `strings` starts with
 * the v Hamiltonian terms (for tr(rho H)) followed by every further
 * distinct product; each is one quantity estimation per evaluation.
 */
struct AnticommutatorPlan {
    std::vector<PauliTerm> strings;
    /// expansion[r] lists (index into strings, real weight) with
    /// tr(rho {P_r, H}) = sum weight * <strings[index]>.
    std::vector<std::vector<std::pair<std::size_t, double>>> expansion;

    [[nodiscard]] std::size_t estimations() const { return strings.size(); }
};

AnticommutatorPlan plan_anticommutators(const Hamiltonian &h);

/// V(rho, P_r) = tr(rho {P_r, H}) - 2 tr(rho H) tr(rho P_r) for each term,
/// with every string in `plan` estimated once.
Eigen::VectorXd projection_residuals(const Hamiltonian &h,
                                     const AnticommutatorPlan &plan,
                                     const StateVector &state,
                                     ExpectationEstimator &estimator);

/// G_ij = sum_r a_r^2 J_ir J_jr for S = {a_r P_r}.
MetricTensor op_vqite_metric(const Hamiltonian &h, const TermJacobian &tj);

/// b = sum_r V(rho, a_r P_r) grad tr(rho a_r P_r) = sum_r a_r^2 V_r J_r.
Eigen::VectorXd op_vqite_force(const Hamiltonian &h, const TermJacobian &tj,
                               const Eigen::VectorXd &residuals);

} // namespace hqng
