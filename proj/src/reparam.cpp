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

#include "hqng/reparam.hpp"

#include <cmath>
#include <stdexcept>

namespace hqng {

Reparameterization Reparameterization::identity() {
    return {"identity", [](const Eigen::VectorXd &psi) { return psi; },
            [](const Eigen::VectorXd &theta) { return theta; },
            [](const Eigen::VectorXd &psi) {
                return Eigen::MatrixXd::Identity(psi.size(), psi.size());
            }};
}

Reparameterization Reparameterization::diagonal(std::string name,
                                                Eigen::VectorXd scales) {
    if ((scales.array() == 0.0).any()) {
        throw std::invalid_argument("diagonal reparameterization needs "
                                    "non-zero scales");
    }
    return {std::move(name),
            [scales](const Eigen::VectorXd &psi) -> Eigen::VectorXd {
                return scales.cwiseProduct(psi);
            },
            [scales](const Eigen::VectorXd &theta) -> Eigen::VectorXd {
                return theta.cwiseQuotient(scales);
            },
            [scales](const Eigen::VectorXd &) -> Eigen::MatrixXd {
                return scales.asDiagonal();
            }};
}

Reparameterization Reparameterization::half_angle_tangent(std::string name,
                                                          double k) {
    if (!(k > 0.0)) {
        throw std::invalid_argument("half_angle_tangent needs k > 0");
    }
    // atan2 keeps the map continuous where tan(psi / 2) diverges.
    return {std::move(name),
            [k](const Eigen::VectorXd &psi) -> Eigen::VectorXd {
                return psi.unaryExpr([k](double p) {
                    return 2.0 * std::atan2(k * std::sin(0.5 * p),
                                            std::cos(0.5 * p));
                });
            },
            [k](const Eigen::VectorXd &theta) -> Eigen::VectorXd {
                return theta.unaryExpr([k](double t) {
                    return 2.0 * std::atan2(std::sin(0.5 * t),
                                            k * std::cos(0.5 * t));
                });
            },
            [k](const Eigen::VectorXd &psi) -> Eigen::MatrixXd {
                const Eigen::VectorXd d = psi.unaryExpr([k](double p) {
                    const double c = std::cos(0.5 * p);
                    const double s = std::sin(0.5 * p);
                    return k / (c * c + k * k * s * s);
                });
                return d.asDiagonal();
            }};
}

Reparameterization named_reparameterization(std::string_view name,
                                            Eigen::Index n_params) {
    if (name == "identity" || name == "none") {
        return Reparameterization::identity();
    }
    if (name == "t1" || name == "t2") {
        const double even = name == "t1" ? 0.8 : 1.2;
        const double odd = name == "t1" ? 1.2 : 0.8;
        Eigen::VectorXd scales(n_params);
        for (Eigen::Index i = 0; i < n_params; ++i) {
            scales[i] = (i % 2 == 0) ? even : odd;
        }
        return Reparameterization::diagonal(std::string(name), scales);
    }
    if (name == "t3") {
        return Reparameterization::half_angle_tangent("t3", 2.0);
    }
    throw std::invalid_argument("unknown reparameterization '" +
                                std::string(name) + "'");
}

} // namespace hqng
