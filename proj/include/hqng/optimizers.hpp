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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hqng/metrics.hpp"
#include "hqng/op_vqite.hpp"
#include "hqng/pauli.hpp"
#include "hqng/reparam.hpp"
#include "hqng/sampling.hpp"
#include "hqng/statevector.hpp"

namespace hqng {

/// 1 kcal/mol in Hartree.
constexpr double kChemicalAccuracy = 1.593e-3;

/// Runs stop once the update source (gradient, or b for OP-VQITE) is
/// smaller than this.
constexpr double kStationaryGradientNorm = 1e-12;

enum class Method { VG, QNG, HQNG, OPVQITE };

std::string to_string(Method method);
/// Accepts vg, qng, hqng / h-qng, opvqite / op-vqite (case-insensitive).
Method parse_method(std::string_view text);

struct OptimizerConfig {
    Method method = Method::HQNG;
    double eta = 0.05;
    InversePolicy inverse_policy = inverse::Regularized{0.1};
    std::size_t max_steps = 100;
    double energy_tolerance = 0.0;
    /// Absent means exact expectations.
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless eta > 0 and max_steps >= 1.
    void validate() const;
};

enum class RunStatus { Converged, BudgetExhausted, SingularMetric };

std::string to_string(RunStatus status);

/**
 * @brief Per-step trace of one optimization run.
 *
 * Entry k describes the point before step k + 1, so every vector holds
 * steps() + 1 entries. `params` are the optimizer's coordinates and
 * `circuit_params` the angles fed to the circuit; they coincide unless a
 * reparameterization is active. Energies are exact even in shot mode.
 */
struct RunRecord {
    std::vector<Eigen::VectorXd> params;
    std::vector<Eigen::VectorXd> circuit_params;
    std::vector<double> energy;
    /// E_k - E_ground; empty when no ground energy was supplied.
    std::vector<double> delta_e;
    std::vector<std::uint64_t> cumulative_estimations;
    RunStatus status = RunStatus::BudgetExhausted;
    std::string message;

    [[nodiscard]] std::size_t steps() const { return energy.size() - 1; }
    /// First step index with delta_e <= threshold.
    [[nodiscard]] std::optional<std::size_t>
    first_step_below(double threshold) const;
};

/// Outcome of a single update.
struct StepResult {
    Eigen::VectorXd params;
    /// Norm of the vector the metric inverse acts on.
    double source_norm = 0.0;
    [[nodiscard]] bool stationary() const {
        return source_norm < kStationaryGradientNorm;
    }
};

/// Quantity estimations charged per step: 2mv for VG and H-QNG,
/// 2mv + 2m(m+1) for QNG, 2mv + |anticommutator strings| for OP-VQITE.
std::uint64_t estimations_per_step(Method method, const Ansatz &ansatz,
                                   const Hamiltonian &h);

/**
 * @brief One optimizer bound to a circuit, a Hamiltonian and a coordinate
 * map.
 *
 * The step functions take optimizer coordinates and return updated ones;
 * a stationary step (source_norm below kStationaryGradientNorm) leaves the
 * parameters unchanged. SingularMetricError propagates from the natural
 * direction solve.
 */
class Optimizer {
  public:
    Optimizer(const Ansatz &ansatz, const Hamiltonian &h,
              OptimizerConfig config,
              Reparameterization map = Reparameterization::identity());

    [[nodiscard]] const OptimizerConfig &config() const { return config_; }
    [[nodiscard]] const Reparameterization &map() const { return map_; }

    StepResult step(const Eigen::VectorXd &params,
                    ExpectationEstimator &estimator) const;

    /// theta - eta grad f
    StepResult vg_step(const Eigen::VectorXd &params,
                       ExpectationEstimator &estimator) const;
    /// theta - eta A^{-1} grad f
    StepResult qng_step(const Eigen::VectorXd &params,
                        ExpectationEstimator &estimator) const;
    /// theta - eta T^{-1} grad f
    StepResult hqng_step(const Eigen::VectorXd &params,
                         ExpectationEstimator &estimator) const;
    /// theta - eta G^{-1} b with S = {a_r P_r}
    StepResult op_vqite_step(const Eigen::VectorXd &params,
                             ExpectationEstimator &estimator) const;

    /// Direction the current method would move along (before scaling by
    /// -eta), with exact expectations.
    Eigen::VectorXd direction(const Eigen::VectorXd &params) const;

  private:
    struct Local {
        Eigen::VectorXd theta;
        Eigen::MatrixXd chain; ///< dtheta/dpsi
        TermJacobian jacobian; ///< in optimizer coordinates
        Eigen::VectorXd gradient;
    };
    Local local(const Eigen::VectorXd &params,
                ExpectationEstimator &estimator) const;
    Eigen::VectorXd raw_direction(const Eigen::VectorXd &params,
                                  ExpectationEstimator &estimator,
                                  double &source_norm) const;

    Ansatz ansatz_;
    Hamiltonian h_;
    OptimizerConfig config_;
    Reparameterization map_;
    AnticommutatorPlan plan_;
};

/**
 * @brief Iterates the configured update from `initial_theta`.
 *
 * `initial_theta` is given in circuit angles and mapped into optimizer
 * coordinates through `map`. Stops when delta_e <= energy_tolerance (only
 * with a ground energy), when the update source vanishes, on a singular
 * metric, or after max_steps. Shot noise uses a stream seeded from
 * config.seed, so identical inputs give identical records.
 */
RunRecord run(const Ansatz &ansatz, const Hamiltonian &h,
              const OptimizerConfig &config,
              const Eigen::VectorXd &initial_theta,
              std::optional<double> ground_energy = std::nullopt,
              const Reparameterization &map = Reparameterization::identity());

/// Explicit-Euler integration of theta' = -M^{-1} grad f for QNG or H-QNG
/// with exact expectations: the circuit-angle trace of run() at eta = dt
/// for round(t_end / dt) steps.
std::vector<Eigen::VectorXd> continuous_trajectory(
    const Ansatz &ansatz, const Hamiltonian &h, Method method, double t_end,
    double dt, const Eigen::VectorXd &initial_theta,
    const InversePolicy &policy = inverse::ExactSolve{},
    const Reparameterization &map = Reparameterization::identity());

} // namespace hqng
