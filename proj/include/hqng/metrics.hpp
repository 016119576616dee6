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
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "hqng/gradients.hpp"
#include "hqng/pauli.hpp"
#include "hqng/sampling.hpp"
#include "hqng/statevector.hpp"

namespace hqng {

enum class MetricKind {
    FubiniStudy,       ///< A
    HamiltonianAware,  ///< T
    FullPauliPullback, ///< G over all 4^n strings
    OperatorProjected, ///< OP-VQITE metric for S = {a_r P_r}
};

std::string to_string(MetricKind kind);

/// Real symmetric positive semidefinite m x m matrix.
struct MetricTensor {
    Eigen::MatrixXd entries;
    MetricKind kind;

    [[nodiscard]] Eigen::Index size() const { return entries.rows(); }
};

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kPsdTolerance = -1e-9;

/// Throws std::logic_error when the matrix is not symmetric within
/// kSymmetryTolerance or has an eigenvalue below kPsdTolerance.
void check_metric_invariants(const MetricTensor &t);

/// Ascending eigenvalues.
Eigen::VectorXd metric_eigenvalues(const MetricTensor &t);

/// A_ij = Re[<d_i phi|d_j phi> - <d_i phi|phi><phi|d_j phi>], exact.
MetricTensor fubini_study(const Ansatz &ansatz, std::span<const double> params);

/**
 * @brief Fubini-Study metric as it would be measured on hardware.
 *
 * Each of the m(m+1)/2 independent elements costs four quantity
 * estimations, 2m(m+1) in total. With an exact estimator the value comes
 * from derivative states and the cost is charged; with a shot estimator the
 * four overlap probabilities |<phi_theta|phi_theta'>|^2 at shifted theta'
 * are sampled and combined by the second-order shift rule.
 */
MetricTensor fubini_study(const Ansatz &ansatz, std::span<const double> params,
                          ExpectationEstimator &estimator);

/// The overlap-shift route with whatever estimator is supplied.
MetricTensor fubini_study_from_overlaps(const Ansatz &ansatz,
                                        std::span<const double> params,
                                        ExpectationEstimator &estimator);

/// T_ij = (1 / (2 sqrt(sum_r a_r^2))) sum_r a_r^2 J_ir J_jr. Reuses the
/// gradient Jacobian, so nothing extra is estimated.
MetricTensor hamiltonian_aware(const Hamiltonian &h, const TermJacobian &tj);

/// G_ij = sum over all 4^n strings P of tr(d_i rho P) tr(d_j rho P).
/// Limited to n <= 4.
MetricTensor full_pauli_pullback(const Ansatz &ansatz,
                                 std::span<const double> params);

constexpr std::size_t kPullbackQubitLimit = 4;

/// t + lambda I. Throws for negative lambda.
MetricTensor regularize(const MetricTensor &t, double lambda);

namespace inverse {

/// Cholesky solve; singular or indefinite input raises SingularMetricError.
struct ExactSolve {};
/// Eigen-truncated inverse dropping eigenvalues below rcond * lambda_max.
struct PseudoInverse {
    double rcond = 1e-10;
};
/// Solve (t + lambda I) d = g.
struct Regularized {
    double lambda = 0.1;
};

} // namespace inverse

using InversePolicy =
    std::variant<inverse::ExactSolve, inverse::PseudoInverse,
                 inverse::Regularized>;

std::string to_string(const InversePolicy &policy);

/// Eigenvalues at or below this fraction of lambda_max count as zero for
/// ExactSolve.
constexpr double kExactSolveRelativeFloor = 1e-12;

/// d with t d = grad under `policy`.
Eigen::VectorXd natural_direction(const MetricTensor &t,
                                  const Eigen::VectorXd &grad,
                                  const InversePolicy &policy);

/// Number of eigenvalues above tolerance * lambda_max.
std::size_t rank_probe(const MetricTensor &t, double tolerance);

} // namespace hqng
