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

#include <functional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace hqng {

/**
 * @brief Classical change of coordinates theta = t(psi).
 *
 * The optimizer works on psi; circuits see theta. Gradients and metrics
 * are carried to psi with the classical Jacobian dtheta/dpsi.
 */
struct Reparameterization {
    std::string name;
    std::function<Eigen::VectorXd(const Eigen::VectorXd &)> to_circuit;
    std::function<Eigen::VectorXd(const Eigen::VectorXd &)> from_circuit;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd &)> jacobian;

    [[nodiscard]] bool is_identity() const { return name == "identity"; }

    static Reparameterization identity();
    /// theta_i = scales_i * psi_i
    static Reparameterization diagonal(std::string name,
                                       Eigen::VectorXd scales);
    /// theta_i = 2 atan(k tan(psi_i / 2)), continued smoothly through
    /// psi = +/- pi.
    static Reparameterization half_angle_tangent(std::string name, double k);
};

/**
 * @brief Named maps: "identity", "t1", "t2", "t3".
 *
 * t1 scales coordinates by (0.8, 1.2, 0.8, ...), t2 by (1.2, 0.8, ...),
 * and t3 is half_angle_tangent with k = 2.
 */
Reparameterization named_reparameterization(std::string_view name,
                                            Eigen::Index n_params);

} // namespace hqng
