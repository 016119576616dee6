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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hqng/metrics.hpp"
#include "hqng/optimizers.hpp"
#include "hqng/pauli.hpp"
#include "hqng/statevector.hpp"

namespace hqng {

/// How a run's starting angles are chosen.
struct InitSpec {
    enum class Kind { Zeros, Uniform, Explicit };
    Kind kind = Kind::Zeros;
    /// Uniform: center + U(-radius, radius) per coordinate.
    std::filesystem::path center_path;
    double radius = 0.3;
    /// Explicit values, or the loaded center for Uniform.
    std::vector<double> values;
};

/// `zeros`, `uniform:<center file>:<radius>` or `explicit:<v0>,<v1>,...`.
/// Relative center paths resolve against `base_dir`.
InitSpec parse_init(std::string_view text,
                    const std::filesystem::path &base_dir = {});

/// Angles for one seed. Uniform draws come from a stream that depends only on
/// the seed, so every method sees the same start for a given seed.
Eigen::VectorXd initial_parameters(const InitSpec &init, std::size_t n_params,
                                   std::uint64_t seed);

/**
 * @brief One experiment read from a flat `key = value` file.
 *
 * Keys: hamiltonian, ansatz, methods, reparams, eta, policy (regularized,
 * exact, pinv), lambda, rcond, lambdas, shots, seeds, max_steps,
 * energy_tolerance, target_delta_e, init, output_dir, threads. Seeds are a
 * comma list and may contain inclusive ranges such as `0..9`.
 */
struct ExperimentConfig {
    std::filesystem::path hamiltonian_path;
    std::filesystem::path ansatz_path;
    std::vector<Method> methods{Method::HQNG};
    std::vector<std::string> reparams{"identity"};
    /// Unset: 0.05 for exact runs and 0.01 with shots.
    std::optional<double> eta;
    std::string policy = "regularized";
    double lambda = 0.1;
    double rcond = 1e-10;
    std::vector<double> lambdas;
    std::optional<std::uint64_t> shots;
    std::vector<std::uint64_t> seeds{0};
    std::size_t max_steps = 100;
    double energy_tolerance = 0.0;
    /// Threshold for steps-to-target and the lambda-sweep classifier.
    double target_delta_e = kChemicalAccuracy;
    InitSpec init;
    std::filesystem::path output_dir = "out";
    /// Worker count; 0 means hardware concurrency.
    std::size_t threads = 0;

    [[nodiscard]] double effective_eta() const {
        return eta.value_or(shots ? 0.01 : 0.05);
    }
    [[nodiscard]] InversePolicy inverse_policy() const;
    /// Throws std::invalid_argument on an inconsistent config.
    void validate() const;
};

ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path &base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path &path);

std::vector<std::uint64_t> parse_seed_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

struct RunOutcome {
    Method method;
    std::string reparam;
    std::uint64_t seed;
    RunRecord record;

    /// `<method>` or `<method>_<reparam>` for non-identity maps.
    [[nodiscard]] std::string label() const;
};

struct ExperimentResult {
    std::optional<double> ground_energy;
    std::vector<RunOutcome> runs;
};

/// Runs every (method, reparam, seed) combination on a bounded worker pool.
/// Results are ordered by method, then reparam, then seed.
ExperimentResult run_experiment(const ExperimentConfig &config);

/// Columns step, energy, [delta_e,] cumulative_estimations, theta_0, ...
void write_run_csv(std::ostream &out, const RunRecord &record);

/// Columns label, step, mean_delta_e, median_delta_e. Runs that stop early
/// contribute their final value to later steps.
void write_summary_csv(std::ostream &out, const ExperimentResult &result);

/// Columns label, seed, status, final_delta_e, steps_to_target,
/// estimations_at_target (empty when the target is never reached).
void write_crossing_csv(std::ostream &out, const ExperimentResult &result,
                        double target_delta_e);

enum class SweepClass { Converged, Oscillating, Slow, Singular };
std::string to_string(SweepClass c);

/// Converged when the final delta_e is at most `target`; otherwise
/// Oscillating when the energy rises on more than 10% of the steps in the
/// second half of the trace; otherwise Slow. Singular runs are labelled as
/// such.
SweepClass classify_sweep_run(const RunRecord &record, double target);

/// Writes per-run CSVs plus summary.csv and crossing.csv into output_dir.
int cmd_run(const ExperimentConfig &config, std::ostream &log);

/// H-QNG with Regularized(lambda) for every lambda in config.lambdas; writes
/// lambda_<value>_seed<k>.csv traces and lambda_summary.csv.
int cmd_lambda_sweep(const ExperimentConfig &config, std::ostream &log);

enum class MetricChoice { A, T, G };
MetricChoice parse_metric_choice(std::string_view text);

/// Prints the tensor as CSV, then its ascending spectrum and numerical rank.
int cmd_metric(const std::filesystem::path &hamiltonian_path,
               const std::filesystem::path &ansatz_path,
               const std::vector<double> &params, MetricChoice which,
               std::ostream &out, double rank_tolerance = 1e-10);

/// Prints energy and degeneracy of the dense ground state as CSV.
int cmd_gs(const std::filesystem::path &hamiltonian_path, std::ostream &out);

} // namespace hqng
