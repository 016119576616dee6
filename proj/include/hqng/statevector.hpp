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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hqng/pauli.hpp"

namespace hqng {

/**
 * @brief Pure n-qubit state as 2^n complex amplitudes.
 *
 * Index bit (n - 1 - q) holds qubit q. Derivative states produced by
 * derivative_states() are not normalized and carry `normalized() == false`.
 */
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(std::size_t n_qubits);
    StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes,
                bool normalized = true);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amplitudes_.size(); }
    [[nodiscard]] bool normalized() const { return normalized_; }
    [[nodiscard]] std::span<const cplx> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] std::span<cplx> amplitudes() { return amplitudes_; }
    [[nodiscard]] const cplx &operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    [[nodiscard]] double norm() const;
    void mark_unnormalized() { normalized_ = false; }

  private:
    std::size_t n_qubits_;
    std::vector<cplx> amplitudes_;
    bool normalized_ = true;
};

/// <a|b>
cplx inner_product(const StateVector &a, const StateVector &b);

/// In-place P|psi>.
void apply_pauli(StateVector &state, const PauliTerm &p);
/// <a|P|b>
cplx pauli_matrix_element(const StateVector &a, const PauliTerm &p,
                          const StateVector &b);

namespace gates {

/// exp(-i theta P / 2) with theta = params[parameter].
struct PauliRotation {
    PauliTerm axis;
    std::size_t parameter;
};
struct Hadamard {
    std::size_t qubit;
};
/// Fixed Pauli gate X, Y or Z on one qubit.
struct SinglePauli {
    char letter;
    std::size_t qubit;
};
struct CNOT {
    std::size_t control;
    std::size_t target;
};

} // namespace gates

using Gate = std::variant<gates::PauliRotation, gates::Hadamard,
                          gates::SinglePauli, gates::CNOT>;

/// Text form used by the ansatz file format, e.g. "RXX q0 q1 p2".
std::string gate_to_string(const Gate &gate);

/**
 * @brief Ordered gate list defining theta -> |phi_theta> = U(theta)|0...0>.
 *
 * Every parameter index in [0, m) must be referenced by at least one
 * rotation. Sharing a parameter across rotations is representable but
 * rejected by the derivative routines.
 */
class Ansatz {
  public:
    Ansatz(std::size_t n_qubits, std::vector<Gate> gates);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t n_params() const { return n_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] bool has_shared_parameters() const { return shared_; }
    /// Index into gates() of the rotation generated by `parameter`.
    /// Requires unshared parameters.
    [[nodiscard]] std::size_t generating_gate(std::size_t parameter) const;
    [[nodiscard]] const PauliTerm &generator(std::size_t parameter) const;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::size_t n_params_ = 0;
    bool shared_ = false;
    std::vector<std::size_t> owner_;
};

/**
 * @brief Parses the line-oriented ansatz format.
 *
 * ```
 * qubits 2
 * RY q0 p0
 * CNOT q0 q1
 * RXX q0 q1 p1
 * H q1
 * ```
 * Rotation names are "R" followed by one axis letter per listed qubit. Each
 * parameter slot p<k> must appear exactly once and slots must cover 0..m-1.
 * Lines starting with '#' are comments.
 */
Ansatz parse_ansatz(std::string_view text);
Ansatz load_ansatz(const std::string &path);
std::string serialize_ansatz(const Ansatz &ansatz);

void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> params);
StateVector apply_gate(const StateVector &state, const Gate &gate,
                       std::span<const double> params);

StateVector prepare_state(const Ansatz &ansatz, std::span<const double> params);

/// <phi|P|phi>, real by hermiticity.
double expectation(const StateVector &state, const PauliTerm &p);

/// |d_i phi_theta> for every parameter i, by inserting -iP/2 after the
/// generating rotation.
std::vector<StateVector> derivative_states(const Ansatz &ansatz,
                                           std::span<const double> params);

} // namespace hqng
