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

#include "hqng/statevector.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hqng/errors.hpp"

namespace hqng {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t qubit_bit(std::size_t n_qubits, std::size_t qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amplitudes_(std::size_t{1} << n_qubits) {
    if (n_qubits == 0 || n_qubits > PauliTerm::kMaxQubits) {
        throw std::invalid_argument("StateVector: qubit count out of range");
    }
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes,
                         bool normalized)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)),
      normalized_(normalized) {
    if (n_qubits == 0 || n_qubits > PauliTerm::kMaxQubits ||
        amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw DimensionError("StateVector: amplitude count must be 2^n");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner_product: dimension mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

void apply_pauli(StateVector &state, const PauliTerm &p) {
    if (p.n_qubits() != state.n_qubits()) {
        throw DimensionError("apply_pauli: qubit count mismatch");
    }
    const cplx phase = kIPowers[p.y_count() % 4];
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    auto amps = state.amplitudes();
    if (x == 0) {
        for (std::size_t b = 0; b < amps.size(); ++b) {
            amps[b] *= phase * parity_sign(b & z);
        }
        return;
    }
    // Pair b with b ^ x, visiting each pair once from its lower member.
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(x));
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if (b & top) {
            continue;
        }
        const std::size_t c = b ^ x;
        const cplx ab = amps[b];
        const cplx ac = amps[c];
        amps[c] = phase * parity_sign(b & z) * ab;
        amps[b] = phase * parity_sign(c & z) * ac;
    }
}

cplx pauli_matrix_element(const StateVector &a, const PauliTerm &p,
                          const StateVector &b) {
    if (a.dim() != b.dim() || p.n_qubits() != a.n_qubits()) {
        throw DimensionError("pauli_matrix_element: dimension mismatch");
    }
    const auto x = p.x_mask();
    const auto z = p.z_mask();
    cplx s = 0.0;
    for (std::size_t k = 0; k < b.dim(); ++k) {
        s += std::conj(a[k ^ x]) * parity_sign(k & z) * b[k];
    }
    return kIPowers[p.y_count() % 4] * s;
}

std::string gate_to_string(const Gate &gate) {
    return std::visit(
        overloaded{
            [](const gates::PauliRotation &g) {
                std::string name = "R";
                std::string qubits;
                for (std::size_t q = 0; q < g.axis.n_qubits(); ++q) {
                    if (g.axis.letter(q) != 'I') {
                        name += g.axis.letter(q);
                        qubits += " q" + std::to_string(q);
                    }
                }
                return name + qubits + " p" + std::to_string(g.parameter);
            },
            [](const gates::Hadamard &g) {
                return "H q" + std::to_string(g.qubit);
            },
            [](const gates::SinglePauli &g) {
                return std::string(1, g.letter) + " q" +
                       std::to_string(g.qubit);
            },
            [](const gates::CNOT &g) {
                return "CNOT q" + std::to_string(g.control) + " q" +
                       std::to_string(g.target);
            }},
        gate);
}

Ansatz::Ansatz(std::size_t n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
    if (n_qubits == 0 || n_qubits > PauliTerm::kMaxQubits) {
        throw std::invalid_argument("Ansatz: qubit count out of range");
    }
    auto check_qubit = [n_qubits](std::size_t q) {
        if (q >= n_qubits) {
            throw std::out_of_range("gate qubit index " + std::to_string(q) +
                                    " out of range");
        }
    };
    std::vector<int> uses;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        std::visit(overloaded{
                       [&](const gates::PauliRotation &g) {
                           if (g.axis.n_qubits() != n_qubits) {
                               throw DimensionError(
                                   "rotation axis has wrong qubit count");
                           }
                           if (g.axis.is_identity()) {
                               throw std::invalid_argument(
                                   "rotation axis must not be the identity");
                           }
                           if (g.parameter >= uses.size()) {
                               uses.resize(g.parameter + 1, 0);
                               owner.resize(g.parameter + 1, 0);
                           }
                           if (++uses[g.parameter] == 1) {
                               owner[g.parameter] = k;
                           }
                       },
                       [&](const gates::Hadamard &g) { check_qubit(g.qubit); },
                       [&](const gates::SinglePauli &g) {
                           check_qubit(g.qubit);
                           if (g.letter != 'X' && g.letter != 'Y' &&
                               g.letter != 'Z') {
                               throw std::invalid_argument(
                                   "fixed Pauli gate must be X, Y or Z");
                           }
                       },
                       [&](const gates::CNOT &g) {
                           check_qubit(g.control);
                           check_qubit(g.target);
                           if (g.control == g.target) {
                               throw std::invalid_argument(
                                   "CNOT control equals target");
                           }
                       }},
                   gates_[k]);
    }
    for (std::size_t i = 0; i < uses.size(); ++i) {
        if (uses[i] == 0) {
            throw std::invalid_argument("parameter p" + std::to_string(i) +
                                        " is not used by any gate");
        }
        shared_ = shared_ || uses[i] > 1;
    }
    n_params_ = uses.size();
    owner_ = std::move(owner);
}

std::size_t Ansatz::generating_gate(std::size_t parameter) const {
    if (parameter >= n_params_) {
        throw std::out_of_range("parameter index out of range");
    }
    if (shared_) {
        throw std::invalid_argument(
            "ansatz reuses parameters across gates; derivative routines "
            "require one gate per parameter");
    }
    return owner_[parameter];
}

const PauliTerm &Ansatz::generator(std::size_t parameter) const {
    return std::get<gates::PauliRotation>(gates_[generating_gate(parameter)])
        .axis;
}

namespace {

std::size_t parse_index(std::string_view token, char prefix,
                        std::size_t line_no) {
    if (token.size() < 2 || token.front() != prefix) {
        throw ParseError(line_no, "expected '" + std::string(1, prefix) +
                                      "<index>', got '" + std::string(token) +
                                      "'");
    }
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data() + 1, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "bad index '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Ansatz parse_ansatz(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t n_qubits = 0;
    std::vector<Gate> gate_list;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty() || tok.front().front() == '#') {
            continue;
        }
        const std::string &name = tok.front();
        if (n_qubits == 0) {
            if (name != "qubits" || tok.size() != 2) {
                throw ParseError(line_no, "expected header 'qubits <n>'");
            }
            std::size_t n = 0;
            auto [ptr, ec] = std::from_chars(
                tok[1].data(), tok[1].data() + tok[1].size(), n);
            if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() ||
                n == 0 || n > PauliTerm::kMaxQubits) {
                throw ParseError(line_no, "bad qubit count '" + tok[1] + "'");
            }
            n_qubits = n;
            continue;
        }
        auto qubit = [&](std::size_t k) {
            const auto q = parse_index(tok[k], 'q', line_no);
            if (q >= n_qubits) {
                throw ParseError(line_no, "qubit " + tok[k] + " out of range");
            }
            return q;
        };
        auto expect_tokens = [&](std::size_t count) {
            if (tok.size() != count) {
                throw ParseError(line_no, "gate '" + name + "' expects " +
                                              std::to_string(count - 1) +
                                              " operands");
            }
        };
        if (name == "H") {
            expect_tokens(2);
            gate_list.emplace_back(gates::Hadamard{qubit(1)});
        } else if (name == "X" || name == "Y" || name == "Z") {
            expect_tokens(2);
            gate_list.emplace_back(gates::SinglePauli{name[0], qubit(1)});
        } else if (name == "CNOT") {
            expect_tokens(3);
            const auto c = qubit(1);
            const auto t = qubit(2);
            if (c == t) {
                throw ParseError(line_no, "CNOT control equals target");
            }
            gate_list.emplace_back(gates::CNOT{c, t});
        } else if (name.size() >= 2 && name.front() == 'R') {
            const std::string axis_letters = name.substr(1);
            expect_tokens(axis_letters.size() + 2);
            std::string letters(n_qubits, 'I');
            for (std::size_t k = 0; k < axis_letters.size(); ++k) {
                const char c = axis_letters[k];
                if (c != 'X' && c != 'Y' && c != 'Z') {
                    throw ParseError(line_no,
                                     "bad rotation axis letter in '" + name +
                                         "'");
                }
                const auto q = qubit(k + 1);
                if (letters[q] != 'I') {
                    throw ParseError(line_no, "qubit repeated in '" + name +
                                                  "'");
                }
                letters[q] = c;
            }
            const auto p = parse_index(tok.back(), 'p', line_no);
            if (p >= seen.size()) {
                seen.resize(p + 1, false);
            }
            if (seen[p]) {
                throw ParseError(line_no,
                                 "parameter " + tok.back() + " used twice");
            }
            seen[p] = true;
            gate_list.emplace_back(gates::PauliRotation{PauliTerm(letters), p});
        } else {
            throw ParseError(line_no, "unknown gate '" + name + "'");
        }
    }
    if (n_qubits == 0) {
        throw ParseError(line_no, "missing 'qubits <n>' header");
    }
    for (std::size_t p = 0; p < seen.size(); ++p) {
        if (!seen[p]) {
            throw ParseError(0, "parameter p" + std::to_string(p) +
                                    " is never used");
        }
    }
    return Ansatz(n_qubits, std::move(gate_list));
}

Ansatz load_ansatz(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open ansatz file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_ansatz(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(path, e.line(), e.detail());
    }
}

std::string serialize_ansatz(const Ansatz &ansatz) {
    std::string out = "qubits " + std::to_string(ansatz.n_qubits()) + "\n";
    for (const auto &g : ansatz.gates()) {
        out += gate_to_string(g);
        out += '\n';
    }
    return out;
}

void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> params) {
    const std::size_t n = state.n_qubits();
    auto amps = state.amplitudes();
    std::visit(
        overloaded{
            [&](const gates::PauliRotation &g) {
                if (g.parameter >= params.size()) {
                    throw std::out_of_range("rotation parameter index " +
                                            std::to_string(g.parameter) +
                                            " out of range");
                }
                if (g.axis.n_qubits() != n) {
                    throw DimensionError("rotation axis qubit count mismatch");
                }
                const double half = 0.5 * params[g.parameter];
                const double c = std::cos(half);
                const cplx minus_i_s{0.0, -std::sin(half)};
                StateVector rotated = state;
                apply_pauli(rotated, g.axis);
                for (std::size_t b = 0; b < amps.size(); ++b) {
                    amps[b] = c * amps[b] + minus_i_s * rotated[b];
                }
            },
            [&](const gates::Hadamard &g) {
                if (g.qubit >= n) {
                    throw std::out_of_range("Hadamard qubit out of range");
                }
                const auto bit = qubit_bit(n, g.qubit);
                const double s = std::numbers::sqrt2 / 2.0;
                for (std::size_t b = 0; b < amps.size(); ++b) {
                    if (b & bit) {
                        continue;
                    }
                    const cplx a0 = amps[b];
                    const cplx a1 = amps[b | bit];
                    amps[b] = s * (a0 + a1);
                    amps[b | bit] = s * (a0 - a1);
                }
            },
            [&](const gates::SinglePauli &g) {
                if (g.qubit >= n) {
                    throw std::out_of_range("Pauli gate qubit out of range");
                }
                apply_pauli(state, PauliTerm::single(n, g.qubit, g.letter));
            },
            [&](const gates::CNOT &g) {
                if (g.control >= n || g.target >= n) {
                    throw std::out_of_range("CNOT qubit out of range");
                }
                const auto cbit = qubit_bit(n, g.control);
                const auto tbit = qubit_bit(n, g.target);
                for (std::size_t b = 0; b < amps.size(); ++b) {
                    if ((b & cbit) && !(b & tbit)) {
                        std::swap(amps[b], amps[b | tbit]);
                    }
                }
            }},
        gate);
}

StateVector apply_gate(const StateVector &state, const Gate &gate,
                       std::span<const double> params) {
    StateVector out = state;
    apply_gate(out, gate, params);
    return out;
}

namespace {

void check_param_count(const Ansatz &ansatz, std::span<const double> params) {
    if (params.size() != ansatz.n_params()) {
        throw DimensionError("expected " + std::to_string(ansatz.n_params()) +
                             " parameters, got " +
                             std::to_string(params.size()));
    }
}

} // namespace

StateVector prepare_state(const Ansatz &ansatz,
                          std::span<const double> params) {
    check_param_count(ansatz, params);
    StateVector state(ansatz.n_qubits());
    for (const auto &g : ansatz.gates()) {
        apply_gate(state, g, params);
    }
    return state;
}

double expectation(const StateVector &state, const PauliTerm &p) {
    if (p.n_qubits() != state.n_qubits()) {
        throw DimensionError("expectation: qubit count mismatch");
    }
    const cplx value = pauli_matrix_element(state, p, state);
    if (std::abs(value.imag()) >= 1e-9) {
        throw std::logic_error("expectation of a Pauli string has imaginary "
                               "part " +
                               std::to_string(value.imag()));
    }
    return value.real();
}

std::vector<StateVector> derivative_states(const Ansatz &ansatz,
                                           std::span<const double> params) {
    check_param_count(ansatz, params);
    const std::size_t m = ansatz.n_params();
    std::vector<StateVector> out;
    out.reserve(m);
    const auto &gate_list = ansatz.gates();
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t branch = ansatz.generating_gate(i);
        StateVector s(ansatz.n_qubits());
        for (std::size_t k = 0; k < gate_list.size(); ++k) {
            apply_gate(s, gate_list[k], params);
            if (k == branch) {
                apply_pauli(s, ansatz.generator(i));
                for (auto &a : s.amplitudes()) {
                    a *= cplx{0.0, -0.5};
                }
            }
        }
        s.mark_unnormalized();
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace hqng
