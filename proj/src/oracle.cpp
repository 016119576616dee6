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

#include "hqng/oracle.hpp"

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "hqng/errors.hpp"
#include "hqng/gradients.hpp"

namespace hqng::oracle {

namespace {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_density_limit(std::size_t n_qubits, const char *what) {
    if (n_qubits > kDensityQubitLimit) {
        throw SizeLimitError(std::string(what) + ": at most " +
                             std::to_string(kDensityQubitLimit) +
                             " qubits, got " + std::to_string(n_qubits));
    }
}

/// factors[q] acts on qubit q; qubit 0 is the leftmost Kronecker factor.
MatrixXcd kron_all(const std::vector<Matrix2cd> &factors) {
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (const auto &f : factors) {
        MatrixXcd next = Eigen::kroneckerProduct(out, f).eval();
        out = std::move(next);
    }
    return out;
}

MatrixXcd single_site(std::size_t n, std::size_t qubit, const Matrix2cd &m) {
    std::vector<Matrix2cd> factors(n, Matrix2cd::Identity());
    factors[qubit] = m;
    return kron_all(factors);
}

std::vector<double> shifted(std::span<const double> params, std::size_t i,
                            double di, std::size_t j, double dj) {
    std::vector<double> out(params.begin(), params.end());
    out[i] += di;
    out[j] += dj;
    return out;
}

} // namespace

GroundSolution ground_state(const Hamiltonian &h) {
    if (h.n_qubits() > kDenseQubitLimit) {
        throw SizeLimitError("ground_state: at most " +
                             std::to_string(kDenseQubitLimit) + " qubits");
    }
    const MatrixXcd dense = dense_matrix(h);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("ground_state: eigensolver failed");
    }
    const Eigen::VectorXd &values = solver.eigenvalues();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    GroundSolution out;
    out.energy = values[0];
    out.degeneracy = 0;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (values[k] - values[0] <= kDegeneracyTolerance * scale) {
            ++out.degeneracy;
        }
    }
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    out.state = StateVector(h.n_qubits(),
                            std::vector<cplx>(v.data(), v.data() + v.size()));
    return out;
}

Eigen::VectorXd fd_gradient(const Ansatz &ansatz, const Hamiltonian &h,
                            std::span<const double> params, double h_step) {
    if (!(h_step > 0.0)) {
        throw std::invalid_argument("fd_gradient: h_step must be positive");
    }
    const std::size_t m = ansatz.n_params();
    Eigen::VectorXd out(static_cast<Eigen::Index>(m));
    std::vector<double> p(params.begin(), params.end());
    for (std::size_t i = 0; i < m; ++i) {
        const double keep = p[i];
        p[i] = keep + h_step;
        const double up = energy(ansatz, h, p);
        p[i] = keep - h_step;
        const double down = energy(ansatz, h, p);
        p[i] = keep;
        out[static_cast<Eigen::Index>(i)] = (up - down) / (2.0 * h_step);
    }
    return out;
}

MetricTensor fd_metric(const Ansatz &ansatz, std::span<const double> params,
                       double h_step) {
    if (!(h_step > 0.0)) {
        throw std::invalid_argument("fd_metric: h_step must be positive");
    }
    const std::size_t m = ansatz.n_params();
    const StateVector base = prepare_state(ansatz, params);
    auto infidelity = [&](const std::vector<double> &p) {
        return 1.0 - std::norm(inner_product(base, prepare_state(ansatz, p)));
    };
    Eigen::MatrixXd a(m, m);
    const double h2 = h_step * h_step;
    for (std::size_t i = 0; i < m; ++i) {
        // The infidelity vanishes at delta = 0, so the centre term drops out.
        const double diag = infidelity(shifted(params, i, h_step, i, 0.0)) +
                            infidelity(shifted(params, i, -h_step, i, 0.0));
        a(i, i) = 0.5 * diag / h2;
        for (std::size_t j = 0; j < i; ++j) {
            const double mixed =
                infidelity(shifted(params, i, h_step, j, h_step)) -
                infidelity(shifted(params, i, h_step, j, -h_step)) -
                infidelity(shifted(params, i, -h_step, j, h_step)) +
                infidelity(shifted(params, i, -h_step, j, -h_step));
            a(i, j) = a(j, i) = 0.5 * mixed / (4.0 * h2);
        }
    }
    return {a, MetricKind::FubiniStudy};
}

Eigen::MatrixXcd density_matrix(const StateVector &state) {
    check_density_limit(state.n_qubits(), "density_matrix");
    const auto amps = state.amplitudes();
    const Eigen::Map<const Eigen::VectorXcd> v(
        amps.data(), static_cast<Eigen::Index>(amps.size()));
    return v * v.adjoint();
}

std::vector<Eigen::MatrixXcd>
density_derivatives(const Ansatz &ansatz, std::span<const double> params,
                    double h_step) {
    check_density_limit(ansatz.n_qubits(), "density_derivatives");
    if (!(h_step > 0.0)) {
        throw std::invalid_argument("density_derivatives: h_step must be "
                                    "positive");
    }
    std::vector<MatrixXcd> out;
    out.reserve(ansatz.n_params());
    for (std::size_t i = 0; i < ansatz.n_params(); ++i) {
        const auto up = density_matrix(
            prepare_state(ansatz, shifted(params, i, h_step, i, 0.0)));
        const auto down = density_matrix(
            prepare_state(ansatz, shifted(params, i, -h_step, i, 0.0)));
        out.push_back((up - down) / (2.0 * h_step));
    }
    return out;
}

Eigen::MatrixXd dense_hs_metric(const Ansatz &ansatz,
                                std::span<const double> params,
                                double h_step) {
    const auto d = density_derivatives(ansatz, params, h_step);
    const auto m = static_cast<Eigen::Index>(d.size());
    Eigen::MatrixXd out(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            out(i, j) = out(j, i) = 0.5 * (d[i] * d[j]).trace().real();
        }
    }
    return out;
}

Eigen::Matrix2cd single_qubit_pauli(char letter) {
    const cplx i{0.0, 1.0};
    Matrix2cd m;
    switch (letter) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, -i, i, 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw std::invalid_argument(std::string("not a Pauli letter: ") +
                                    letter);
    }
    return m;
}

Eigen::MatrixXcd kron_pauli(const PauliTerm &p) {
    check_density_limit(p.n_qubits(), "kron_pauli");
    std::vector<Matrix2cd> factors;
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        factors.push_back(single_qubit_pauli(p.letter(q)));
    }
    return kron_all(factors);
}

Eigen::MatrixXcd dense_gate_matrix(const Gate &gate, std::size_t n_qubits,
                                   std::span<const double> params) {
    check_density_limit(n_qubits, "dense_gate_matrix");
    const auto dim = Eigen::Index{1} << n_qubits;
    return std::visit(
        overloaded{
            [&](const gates::PauliRotation &g) -> MatrixXcd {
                const double half = 0.5 * params[g.parameter];
                return std::cos(half) * MatrixXcd::Identity(dim, dim) -
                       cplx{0.0, std::sin(half)} * kron_pauli(g.axis);
            },
            [&](const gates::Hadamard &g) -> MatrixXcd {
                Matrix2cd hd;
                hd << 1, 1, 1, -1;
                return single_site(n_qubits, g.qubit, hd / std::sqrt(2.0));
            },
            [&](const gates::SinglePauli &g) -> MatrixXcd {
                return single_site(n_qubits, g.qubit,
                                   single_qubit_pauli(g.letter));
            },
            [&](const gates::CNOT &g) -> MatrixXcd {
                Matrix2cd p0;
                Matrix2cd p1;
                p0 << 1, 0, 0, 0;
                p1 << 0, 0, 0, 1;
                std::vector<Matrix2cd> off(n_qubits, Matrix2cd::Identity());
                std::vector<Matrix2cd> on(n_qubits, Matrix2cd::Identity());
                off[g.control] = p0;
                on[g.control] = p1;
                on[g.target] = single_qubit_pauli('X');
                return kron_all(off) + kron_all(on);
            },
        },
        gate);
}

Eigen::VectorXcd dense_prepare_state(const Ansatz &ansatz,
                                     std::span<const double> params) {
    if (params.size() != ansatz.n_params()) {
        throw DimensionError("dense_prepare_state: parameter count mismatch");
    }
    const auto dim = Eigen::Index{1} << ansatz.n_qubits();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[0] = 1.0;
    for (const auto &g : ansatz.gates()) {
        v = dense_gate_matrix(g, ansatz.n_qubits(), params) * v;
    }
    return v;
}

} // namespace hqng::oracle
