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

#include "hqng/optimizers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hqng/errors.hpp"
#include "hqng/gradients.hpp"

namespace hqng {

namespace {

std::span<const double> as_span(const Eigen::VectorXd &v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

} // namespace

std::string to_string(Method method) {
    switch (method) {
    case Method::VG:
        return "vg";
    case Method::QNG:
        return "qng";
    case Method::HQNG:
        return "hqng";
    case Method::OPVQITE:
        return "opvqite";
    }
    return "unknown";
}

Method parse_method(std::string_view text) {
    std::string key;
    for (char c : text) {
        if (c != '-' && c != '_') {
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (key == "vg") {
        return Method::VG;
    }
    if (key == "qng") {
        return Method::QNG;
    }
    if (key == "hqng") {
        return Method::HQNG;
    }
    if (key == "opvqite") {
        return Method::OPVQITE;
    }
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

void OptimizerConfig::validate() const {
    if (!(eta > 0.0)) {
        throw std::invalid_argument("eta must be positive");
    }
    if (max_steps < 1) {
        throw std::invalid_argument("max_steps must be at least 1");
    }
    if (!(energy_tolerance >= 0.0)) {
        throw std::invalid_argument("energy_tolerance must be >= 0");
    }
    if (shots && *shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (const auto *r = std::get_if<inverse::Regularized>(&inverse_policy);
        r && !(r->lambda >= 0.0)) {
        throw std::invalid_argument("lambda must be >= 0");
    }
}

std::string to_string(RunStatus status) {
    switch (status) {
    case RunStatus::Converged:
        return "Converged";
    case RunStatus::BudgetExhausted:
        return "BudgetExhausted";
    case RunStatus::SingularMetric:
        return "SingularMetric";
    }
    return "unknown";
}

std::optional<std::size_t> RunRecord::first_step_below(double threshold) const {
    for (std::size_t k = 0; k < delta_e.size(); ++k) {
        if (delta_e[k] <= threshold) {
            return k;
        }
    }
    return std::nullopt;
}

std::uint64_t estimations_per_step(Method method, const Ansatz &ansatz,
                                   const Hamiltonian &h) {
    const std::uint64_t m = ansatz.n_params();
    const std::uint64_t v = h.size();
    switch (method) {
    case Method::VG:
    case Method::HQNG:
        return 2 * m * v;
    case Method::QNG:
        return 2 * m * v + 2 * m * (m + 1);
    case Method::OPVQITE:
        return 2 * m * v + plan_anticommutators(h).estimations();
    }
    return 0;
}

Optimizer::Optimizer(const Ansatz &ansatz, const Hamiltonian &h,
                     OptimizerConfig config, Reparameterization map)
    : ansatz_(ansatz), h_(h), config_(std::move(config)),
      map_(std::move(map)) {
    config_.validate();
    if (ansatz.n_qubits() != h.n_qubits()) {
        throw DimensionError("ansatz and Hamiltonian qubit counts differ");
    }
    if (config_.method == Method::OPVQITE) {
        plan_ = plan_anticommutators(h);
    }
}

Optimizer::Local Optimizer::local(const Eigen::VectorXd &params,
                                  ExpectationEstimator &estimator) const {
    Local out;
    out.theta = map_.to_circuit(params);
    auto tj = parameter_shift_jacobian(ansatz_, h_, as_span(out.theta),
                                       estimator);
    if (map_.is_identity()) {
        out.chain = Eigen::MatrixXd::Identity(params.size(), params.size());
        out.jacobian = std::move(tj);
    } else {
        out.chain = map_.jacobian(params);
        out.jacobian.entries = out.chain.transpose() * tj.entries;
    }
    out.gradient = gradient(h_, out.jacobian);
    return out;
}

Eigen::VectorXd Optimizer::raw_direction(const Eigen::VectorXd &params,
                                         ExpectationEstimator &estimator,
                                         double &source_norm) const {
    if (static_cast<std::size_t>(params.size()) != ansatz_.n_params()) {
        throw DimensionError("optimizer step: parameter count mismatch");
    }
    const Local loc = local(params, estimator);
    const auto m = params.size();
    // A vanished source ends the run, so the metric is never solved there.
    auto stationary = [&](double norm) {
        source_norm = norm;
        return norm < kStationaryGradientNorm;
    };
    switch (config_.method) {
    case Method::VG:
        source_norm = loc.gradient.norm();
        return loc.gradient;
    case Method::QNG: {
        if (stationary(loc.gradient.norm())) {
            return Eigen::VectorXd::Zero(m);
        }
        MetricTensor a = fubini_study(ansatz_, as_span(loc.theta), estimator);
        if (!map_.is_identity()) {
            a.entries = loc.chain.transpose() * a.entries * loc.chain;
        }
        return natural_direction(a, loc.gradient, config_.inverse_policy);
    }
    case Method::HQNG: {
        if (stationary(loc.gradient.norm())) {
            return Eigen::VectorXd::Zero(m);
        }
        const MetricTensor t = hamiltonian_aware(h_, loc.jacobian);
        return natural_direction(t, loc.gradient, config_.inverse_policy);
    }
    case Method::OPVQITE: {
        const auto state = prepare_state(ansatz_, as_span(loc.theta));
        const auto residuals =
            projection_residuals(h_, plan_, state, estimator);
        const Eigen::VectorXd b = op_vqite_force(h_, loc.jacobian, residuals);
        if (stationary(b.norm())) {
            return Eigen::VectorXd::Zero(m);
        }
        const MetricTensor g = op_vqite_metric(h_, loc.jacobian);
        return natural_direction(g, b, config_.inverse_policy);
    }
    }
    throw std::logic_error("unhandled optimization method");
}

StepResult Optimizer::step(const Eigen::VectorXd &params,
                           ExpectationEstimator &estimator) const {
    double source_norm = 0.0;
    const Eigen::VectorXd d = raw_direction(params, estimator, source_norm);
    StepResult result{params, source_norm};
    if (!result.stationary()) {
        result.params = params - config_.eta * d;
    }
    return result;
}

namespace {

StepResult step_as(const Ansatz &ansatz, const Hamiltonian &h,
                   const OptimizerConfig &config, const Reparameterization &map,
                   Method method, const Eigen::VectorXd &params,
                   ExpectationEstimator &estimator) {
    OptimizerConfig c = config;
    c.method = method;
    return Optimizer(ansatz, h, c, map).step(params, estimator);
}

} // namespace

StepResult Optimizer::vg_step(const Eigen::VectorXd &params,
                              ExpectationEstimator &estimator) const {
    return step_as(ansatz_, h_, config_, map_, Method::VG, params, estimator);
}

StepResult Optimizer::qng_step(const Eigen::VectorXd &params,
                               ExpectationEstimator &estimator) const {
    return step_as(ansatz_, h_, config_, map_, Method::QNG, params, estimator);
}

StepResult Optimizer::hqng_step(const Eigen::VectorXd &params,
                                ExpectationEstimator &estimator) const {
    return step_as(ansatz_, h_, config_, map_, Method::HQNG, params,
                   estimator);
}

StepResult Optimizer::op_vqite_step(const Eigen::VectorXd &params,
                                    ExpectationEstimator &estimator) const {
    return step_as(ansatz_, h_, config_, map_, Method::OPVQITE, params,
                   estimator);
}

Eigen::VectorXd Optimizer::direction(const Eigen::VectorXd &params) const {
    auto estimator = ExpectationEstimator::exact();
    double source_norm = 0.0;
    return raw_direction(params, estimator, source_norm);
}

RunRecord run(const Ansatz &ansatz, const Hamiltonian &h,
              const OptimizerConfig &config,
              const Eigen::VectorXd &initial_theta,
              std::optional<double> ground_energy,
              const Reparameterization &map) {
    config.validate();
    if (static_cast<std::size_t>(initial_theta.size()) != ansatz.n_params()) {
        throw DimensionError("initial parameters: expected " +
                             std::to_string(ansatz.n_params()) + ", got " +
                             std::to_string(initial_theta.size()));
    }
    const Optimizer optimizer(ansatz, h, config, map);
    auto estimator = config.shots ? ExpectationEstimator::shots(
                                        *config.shots, config.seed, 1)
                                  : ExpectationEstimator::exact();

    RunRecord record;
    auto push = [&](const Eigen::VectorXd &psi) {
        Eigen::VectorXd theta = map.to_circuit(psi);
        const double e = energy(ansatz, h, as_span(theta));
        record.params.push_back(psi);
        record.circuit_params.push_back(std::move(theta));
        record.energy.push_back(e);
        if (ground_energy) {
            record.delta_e.push_back(e - *ground_energy);
        }
        record.cumulative_estimations.push_back(estimator.quantities());
    };
    auto reached_tolerance = [&] {
        return ground_energy &&
               record.delta_e.back() <= config.energy_tolerance;
    };

    Eigen::VectorXd psi = map.from_circuit(initial_theta);
    push(psi);
    record.status = RunStatus::BudgetExhausted;
    for (std::size_t k = 0; k < config.max_steps; ++k) {
        if (reached_tolerance()) {
            record.status = RunStatus::Converged;
            record.message = "energy tolerance reached";
            return record;
        }
        StepResult result;
        try {
            result = optimizer.step(psi, estimator);
        } catch (const SingularMetricError &e) {
            record.status = RunStatus::SingularMetric;
            record.message = e.what();
            return record;
        }
        if (result.stationary()) {
            record.status = RunStatus::Converged;
            record.message = "update source vanished";
            return record;
        }
        psi = std::move(result.params);
        push(psi);
    }
    if (reached_tolerance()) {
        record.status = RunStatus::Converged;
        record.message = "energy tolerance reached";
    } else {
        record.message = "step budget exhausted";
    }
    return record;
}

std::vector<Eigen::VectorXd> continuous_trajectory(
    const Ansatz &ansatz, const Hamiltonian &h, Method method, double t_end,
    double dt, const Eigen::VectorXd &initial_theta,
    const InversePolicy &policy, const Reparameterization &map) {
    if (!(dt > 0.0) || !(t_end >= 0.0)) {
        throw std::invalid_argument("continuous_trajectory needs dt > 0 and "
                                    "t_end >= 0");
    }
    if (method != Method::QNG && method != Method::HQNG) {
        throw std::invalid_argument(
            "continuous_trajectory is defined for QNG and H-QNG");
    }
    const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
    if (steps == 0) {
        return {initial_theta};
    }
    OptimizerConfig config;
    config.method = method;
    config.eta = dt;
    config.inverse_policy = policy;
    config.max_steps = steps;
    return run(ansatz, h, config, initial_theta, std::nullopt, map)
        .circuit_params;
}

} // namespace hqng
