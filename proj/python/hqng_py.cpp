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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hqng/errors.hpp"
#include "hqng/gradients.hpp"
#include "hqng/metrics.hpp"
#include "hqng/op_vqite.hpp"
#include "hqng/optimizers.hpp"
#include "hqng/oracle.hpp"
#include "hqng/reparam.hpp"

namespace py = pybind11;
using namespace hqng;

namespace {

std::vector<double> angles(const Eigen::VectorXd &v) {
    return {v.data(), v.data() + v.size()};
}

InversePolicy make_policy(const std::string &name, double lambda, double rcond) {
    if (name == "regularized") {
        return inverse::Regularized{lambda};
    }
    if (name == "exact") {
        return inverse::ExactSolve{};
    }
    if (name == "pinv") {
        return inverse::PseudoInverse{rcond};
    }
    throw std::invalid_argument("unknown policy '" + name + "'");
}

TermJacobian jacobian(const Ansatz &ansatz, const Hamiltonian &h,
                      const Eigen::VectorXd &params) {
    auto exact = ExpectationEstimator::exact();
    return parameter_shift_jacobian(ansatz, h, angles(params), exact);
}

} // namespace

PYBIND11_MODULE(_hqng, m) {
    m.doc() = "Statevector VQE with Hamiltonian-aware natural gradients";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<SingularMetricError>(m, "SingularMetricError",
                                                PyExc_ArithmeticError);

    m.attr("CHEMICAL_ACCURACY") = kChemicalAccuracy;

    py::class_<Hamiltonian>(m, "Hamiltonian")
        .def_property_readonly("n_qubits", &Hamiltonian::n_qubits)
        .def("__len__", &Hamiltonian::size)
        .def_property_readonly("coefficients", &Hamiltonian::coefficients)
        .def("terms",
             [](const Hamiltonian &h) {
                 std::vector<std::pair<double, std::string>> out;
                 for (const auto &t : h.terms()) {
                     out.emplace_back(t.coefficient, t.term.letters());
                 }
                 return out;
             })
        .def("scaled", &Hamiltonian::scaled, py::arg("c"))
        .def("matrix", [](const Hamiltonian &h) { return dense_matrix(h); })
        .def("__str__", &serialize_hamiltonian);

    py::class_<Ansatz>(m, "Ansatz")
        .def_property_readonly("n_qubits", &Ansatz::n_qubits)
        .def_property_readonly("n_params", &Ansatz::n_params)
        .def("__str__", &serialize_ansatz);

    m.def("parse_hamiltonian", [](const std::string &text) {
        return parse_hamiltonian(text);
    });
    m.def("load_hamiltonian", &load_hamiltonian, py::arg("path"));
    m.def("parse_ansatz", [](const std::string &text) { return parse_ansatz(text); });
    m.def("load_ansatz", &load_ansatz, py::arg("path"));

    m.def(
        "state",
        [](const Ansatz &a, const Eigen::VectorXd &params) {
            const auto s = prepare_state(a, angles(params));
            const auto amps = s.amplitudes();
            return Eigen::VectorXcd(
                Eigen::Map<const Eigen::VectorXcd>(amps.data(),
                                                   static_cast<Eigen::Index>(amps.size())));
        },
        py::arg("ansatz"), py::arg("params"));
    m.def(
        "energy",
        [](const Ansatz &a, const Hamiltonian &h, const Eigen::VectorXd &params) {
            return energy(a, h, angles(params));
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("params"));
    m.def(
        "gradient",
        [](const Ansatz &a, const Hamiltonian &h, const Eigen::VectorXd &params) {
            return gradient(h, jacobian(a, h, params));
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("params"));
    m.def(
        "fubini_study",
        [](const Ansatz &a, const Eigen::VectorXd &params) {
            return Eigen::MatrixXd(fubini_study(a, angles(params)).entries);
        },
        py::arg("ansatz"), py::arg("params"));
    m.def(
        "hamiltonian_aware_metric",
        [](const Ansatz &a, const Hamiltonian &h, const Eigen::VectorXd &params) {
            return Eigen::MatrixXd(hamiltonian_aware(h, jacobian(a, h, params)).entries);
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("params"));
    m.def(
        "op_vqite_metric",
        [](const Ansatz &a, const Hamiltonian &h, const Eigen::VectorXd &params) {
            return Eigen::MatrixXd(op_vqite_metric(h, jacobian(a, h, params)).entries);
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("params"));
    m.def(
        "full_pauli_pullback",
        [](const Ansatz &a, const Eigen::VectorXd &params) {
            return Eigen::MatrixXd(full_pauli_pullback(a, angles(params)).entries);
        },
        py::arg("ansatz"), py::arg("params"));

    m.def(
        "ground_state",
        [](const Hamiltonian &h) {
            const auto g = oracle::ground_state(h);
            return py::make_tuple(g.energy, g.degeneracy);
        },
        py::arg("hamiltonian"));

    m.def(
        "estimations_per_step",
        [](const std::string &method, const Ansatz &a, const Hamiltonian &h) {
            return estimations_per_step(parse_method(method), a, h);
        },
        py::arg("method"), py::arg("ansatz"), py::arg("hamiltonian"));

    m.def(
        "run",
        [](const Ansatz &a, const Hamiltonian &h, const Eigen::VectorXd &initial,
           const std::string &method, double eta, std::size_t max_steps,
           const std::string &policy, double lambda, double rcond,
           std::optional<std::uint64_t> shots, std::uint64_t seed,
           std::optional<double> ground_energy, const std::string &reparam,
           double energy_tolerance) {
            OptimizerConfig c;
            c.method = parse_method(method);
            c.eta = eta;
            c.max_steps = max_steps;
            c.inverse_policy = make_policy(policy, lambda, rcond);
            c.shots = shots;
            c.seed = seed;
            c.energy_tolerance = energy_tolerance;
            const auto map = named_reparameterization(
                reparam, static_cast<Eigen::Index>(a.n_params()));
            RunRecord rec;
            {
                py::gil_scoped_release release;
                rec = hqng::run(a, h, c, initial, ground_energy, map);
            }
            Eigen::MatrixXd theta(static_cast<Eigen::Index>(rec.circuit_params.size()),
                                  static_cast<Eigen::Index>(a.n_params()));
            for (std::size_t k = 0; k < rec.circuit_params.size(); ++k) {
                theta.row(static_cast<Eigen::Index>(k)) =
                    rec.circuit_params[k].transpose();
            }
            py::dict out;
            out["energy"] = rec.energy;
            out["delta_e"] = rec.delta_e;
            out["cumulative_estimations"] = rec.cumulative_estimations;
            out["theta"] = theta;
            out["status"] = to_string(rec.status);
            out["message"] = rec.message;
            return out;
        },
        py::arg("ansatz"), py::arg("hamiltonian"), py::arg("initial"),
        py::arg("method") = "hqng", py::arg("eta") = 0.05,
        py::arg("max_steps") = 100, py::arg("policy") = "regularized",
        py::arg("lambda_") = 0.1, py::arg("rcond") = 1e-10,
        py::arg("shots") = py::none(), py::arg("seed") = 0,
        py::arg("ground_energy") = py::none(), py::arg("reparam") = "identity",
        py::arg("energy_tolerance") = 0.0);
}
