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

#include "hqng/metrics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hqng/errors.hpp"
#include "hqng/format.hpp"

namespace hqng {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd &m) {
    return 0.5 * (m + m.transpose());
}

double overlap_probability(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

} // namespace

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::FubiniStudy:
        return "FubiniStudy";
    case MetricKind::HamiltonianAware:
        return "HamiltonianAware";
    case MetricKind::FullPauliPullback:
        return "FullPauliPullback";
    case MetricKind::OperatorProjected:
        return "OperatorProjected";
    }
    return "unknown";
}

void check_metric_invariants(const MetricTensor &t) {
    if (t.entries.rows() != t.entries.cols()) {
        throw std::logic_error("metric tensor is not square");
    }
    if (t.size() == 0) {
        return;
    }
    const double asym = (t.entries - t.entries.transpose()).cwiseAbs().maxCoeff();
    if (asym >= kSymmetryTolerance) {
        throw std::logic_error(to_string(t.kind) +
                               " metric is not symmetric (deviation " +
                               format_double(asym) + ")");
    }
    const double lowest = metric_eigenvalues(t)[0];
    if (lowest < kPsdTolerance) {
        throw std::logic_error(to_string(t.kind) +
                               " metric has negative eigenvalue " +
                               format_double(lowest));
    }
}

Eigen::VectorXd metric_eigenvalues(const MetricTensor &t) {
    if (t.size() == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        t.entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

MetricTensor fubini_study(const Ansatz &ansatz,
                          std::span<const double> params) {
    const auto state = prepare_state(ansatz, params);
    const auto derivs = derivative_states(ansatz, params);
    const auto m = static_cast<Eigen::Index>(derivs.size());
    std::vector<cplx> berry(derivs.size());
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        berry[i] = inner_product(derivs[i], state);
    }
    Eigen::MatrixXd a(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i; j < m; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            const cplx value = inner_product(derivs[ui], derivs[uj]) -
                               berry[ui] * std::conj(berry[uj]);
            a(i, j) = value.real();
            a(j, i) = value.real();
        }
    }
    MetricTensor t{std::move(a), MetricKind::FubiniStudy};
    check_metric_invariants(t);
    return t;
}

MetricTensor fubini_study_from_overlaps(const Ansatz &ansatz,
                                        std::span<const double> params,
                                        ExpectationEstimator &estimator) {
    const std::size_t m = ansatz.n_params();
    for (std::size_t i = 0; i < m; ++i) {
        (void)ansatz.generating_gate(i);
    }
    const auto state = prepare_state(ansatz, params);
    std::vector<double> shifted(params.begin(), params.end());
    auto overlap = [&](std::size_t i, double si, std::size_t j, double sj) {
        shifted[i] += si;
        shifted[j] += sj;
        const double p =
            overlap_probability(state, prepare_state(ansatz, shifted));
        shifted[i] = params[i];
        shifted[j] = params[j];
        return estimator.estimate_probability(p);
    };
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double kPi = std::numbers::pi;
    // A = -1/2 Hessian of the overlap F(delta) = |<phi_theta|phi_theta+delta>|^2.
    const auto mm = static_cast<Eigen::Index>(m);
    Eigen::MatrixXd a(mm, mm);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double hessian = 0.0;
            if (i == j) {
                // F is a degree-one trigonometric polynomial in delta_i.
                const double fp = overlap(i, kPi, j, 0.0);
                const double fm = overlap(i, -kPi, j, 0.0);
                const double f0a = estimator.estimate_probability(1.0);
                const double f0b = estimator.estimate_probability(1.0);
                hessian = 0.25 * (fp + fm - f0a - f0b);
            } else {
                const double fpp = overlap(i, kHalfPi, j, kHalfPi);
                const double fpm = overlap(i, kHalfPi, j, -kHalfPi);
                const double fmp = overlap(i, -kHalfPi, j, kHalfPi);
                const double fmm = overlap(i, -kHalfPi, j, -kHalfPi);
                hessian = 0.25 * (fpp - fpm - fmp + fmm);
            }
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            a(ii, jj) = -0.5 * hessian;
            a(jj, ii) = a(ii, jj);
        }
    }
    return {std::move(a), MetricKind::FubiniStudy};
}

MetricTensor fubini_study(const Ansatz &ansatz, std::span<const double> params,
                          ExpectationEstimator &estimator) {
    if (!estimator.is_exact()) {
        return fubini_study_from_overlaps(ansatz, params, estimator);
    }
    const auto m = static_cast<std::uint64_t>(ansatz.n_params());
    estimator.charge(2 * m * (m + 1));
    return fubini_study(ansatz, params);
}

MetricTensor hamiltonian_aware(const Hamiltonian &h, const TermJacobian &tj) {
    if (static_cast<std::size_t>(tj.entries.cols()) != h.size()) {
        throw DimensionError(
            "hamiltonian_aware: Jacobian columns do not match terms");
    }
    const double prefactor =
        1.0 / (2.0 * std::sqrt(h.coefficient_norm_squared()));
    const Eigen::MatrixXd weighted = tj.entries * h.coefficients().asDiagonal();
    return {symmetrized(prefactor * weighted * weighted.transpose()),
            MetricKind::HamiltonianAware};
}

MetricTensor full_pauli_pullback(const Ansatz &ansatz,
                                 std::span<const double> params) {
    if (ansatz.n_qubits() > kPullbackQubitLimit) {
        throw SizeLimitError("full_pauli_pullback: more than " +
                             std::to_string(kPullbackQubitLimit) + " qubits");
    }
    const auto basis = full_basis_hamiltonian(ansatz.n_qubits());
    auto estimator = ExpectationEstimator::exact();
    const auto tj = parameter_shift_jacobian(ansatz, basis, params, estimator);
    MetricTensor g{symmetrized(tj.entries * tj.entries.transpose()),
                   MetricKind::FullPauliPullback};
    check_metric_invariants(g);
    return g;
}

MetricTensor regularize(const MetricTensor &t, double lambda) {
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("regularization lambda must be >= 0");
    }
    MetricTensor out = t;
    out.entries.diagonal().array() += lambda;
    return out;
}

std::string to_string(const InversePolicy &policy) {
    return std::visit(
        overloaded{[](const inverse::ExactSolve &) { return std::string("exact"); },
                   [](const inverse::PseudoInverse &p) {
                       return "pinv(" + format_double(p.rcond) + ")";
                   },
                   [](const inverse::Regularized &r) {
                       return "regularized(" + format_double(r.lambda) + ")";
                   }},
        policy);
}

namespace {

Eigen::VectorXd exact_solve(const MetricTensor &t,
                            const Eigen::VectorXd &grad) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        t.entries, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    const double lowest = ev[0];
    const double highest = ev[ev.size() - 1];
    if (!(highest > 0.0) || lowest <= kExactSolveRelativeFloor * highest) {
        throw SingularMetricError(lowest);
    }
    Eigen::LLT<Eigen::MatrixXd> llt(t.entries);
    if (llt.info() != Eigen::Success) {
        throw SingularMetricError(lowest);
    }
    return llt.solve(grad);
}

Eigen::VectorXd pseudo_inverse_solve(const MetricTensor &t,
                                     const Eigen::VectorXd &grad,
                                     double rcond) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t.entries);
    const auto &ev = solver.eigenvalues();
    const double cutoff = rcond * ev[ev.size() - 1];
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (ev[k] > cutoff && ev[k] > 0.0) {
            inv[k] = 1.0 / ev[k];
        }
    }
    const auto &v = solver.eigenvectors();
    return v * (inv.asDiagonal() * (v.transpose() * grad));
}

} // namespace

Eigen::VectorXd natural_direction(const MetricTensor &t,
                                  const Eigen::VectorXd &grad,
                                  const InversePolicy &policy) {
    if (t.entries.rows() != grad.size() || t.entries.cols() != grad.size()) {
        throw DimensionError("natural_direction: metric is " +
                             std::to_string(t.entries.rows()) + "x" +
                             std::to_string(t.entries.cols()) +
                             " but gradient has " +
                             std::to_string(grad.size()) + " entries");
    }
    if (grad.size() == 0) {
        return {};
    }
    return std::visit(
        overloaded{
            [&](const inverse::ExactSolve &) { return exact_solve(t, grad); },
            [&](const inverse::PseudoInverse &p) {
                return pseudo_inverse_solve(t, grad, p.rcond);
            },
            [&](const inverse::Regularized &r) {
                return exact_solve(regularize(t, r.lambda), grad);
            }},
        policy);
}

std::size_t rank_probe(const MetricTensor &t, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("rank_probe tolerance must be positive");
    }
    if (t.size() == 0) {
        return 0;
    }
    const auto ev = metric_eigenvalues(t);
    const double highest = ev[ev.size() - 1];
    if (!(highest > 0.0)) {
        return 0;
    }
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        rank += ev[k] > tolerance * highest ? 1 : 0;
    }
    return rank;
}

} // namespace hqng
