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

#include "hqng/op_vqite.hpp"

#include <unordered_map>

#include "hqng/errors.hpp"

namespace hqng {

AnticommutatorPlan plan_anticommutators(const Hamiltonian &h) {
    AnticommutatorPlan plan;
    std::unordered_map<PauliTerm, std::size_t, PauliTermHash> index;
    auto slot = [&](const PauliTerm &p) {
        auto [it, inserted] = index.try_emplace(p, plan.strings.size());
        if (inserted) {
            plan.strings.push_back(p);
        }
        return it->second;
    };
    for (const auto &t : h.terms()) {
        slot(t.term);
    }
    plan.expansion.resize(h.size());
    for (std::size_t r = 0; r < h.size(); ++r) {
        const auto &pr = h[r].term;
        for (const auto &t : h.terms()) {
            if (!pr.commutes_with(t.term)) {
                continue;
            }
            const auto product = pauli_product(pr, t.term);
            // Commuting Pauli strings multiply to a real phase.
            const double weight = 2.0 * t.coefficient * product.phase.real();
            plan.expansion[r].emplace_back(slot(product.term), weight);
        }
    }
    return plan;
}

Eigen::VectorXd projection_residuals(const Hamiltonian &h,
                                     const AnticommutatorPlan &plan,
                                     const StateVector &state,
                                     ExpectationEstimator &estimator) {
    if (plan.expansion.size() != h.size() || state.n_qubits() != h.n_qubits()) {
        throw DimensionError("projection_residuals: plan does not match H");
    }
    Eigen::VectorXd values(plan.strings.size());
    for (std::size_t k = 0; k < plan.strings.size(); ++k) {
        const auto &p = plan.strings[k];
        values[static_cast<Eigen::Index>(k)] =
            p.is_identity() ? estimator.pass_through(1.0)
                            : estimator.estimate(expectation(state, p));
    }
    const auto v = static_cast<Eigen::Index>(h.size());
    const Eigen::VectorXd term_values = values.head(v);
    const double energy = h.coefficients().dot(term_values);
    Eigen::VectorXd residuals(v);
    for (Eigen::Index r = 0; r < v; ++r) {
        double anti = 0.0;
        for (const auto &[k, weight] :
             plan.expansion[static_cast<std::size_t>(r)]) {
            anti += weight * values[static_cast<Eigen::Index>(k)];
        }
        residuals[r] = anti - 2.0 * energy * term_values[r];
    }
    return residuals;
}

MetricTensor op_vqite_metric(const Hamiltonian &h, const TermJacobian &tj) {
    if (static_cast<std::size_t>(tj.entries.cols()) != h.size()) {
        throw DimensionError("op_vqite_metric: Jacobian columns do not match");
    }
    const Eigen::MatrixXd weighted = tj.entries * h.coefficients().asDiagonal();
    const Eigen::MatrixXd g = weighted * weighted.transpose();
    return {0.5 * (g + g.transpose()), MetricKind::OperatorProjected};
}

Eigen::VectorXd op_vqite_force(const Hamiltonian &h, const TermJacobian &tj,
                               const Eigen::VectorXd &residuals) {
    if (static_cast<std::size_t>(tj.entries.cols()) != h.size() ||
        static_cast<std::size_t>(residuals.size()) != h.size()) {
        throw DimensionError("op_vqite_force: size mismatch");
    }
    const Eigen::VectorXd a = h.coefficients();
    return tj.entries * (a.array().square() * residuals.array()).matrix();
}

} // namespace hqng
