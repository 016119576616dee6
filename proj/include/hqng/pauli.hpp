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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hqng {

using cplx = std::complex<double>;

/**
 * @brief An n-qubit Pauli string stored as an (x, z) bit-mask pair.
 *
 * Qubit 0 is the leftmost letter and maps to the most significant bit of a
 * computational-basis index, so qubit q lives in bit (n - 1 - q) of both
 * masks. A letter is I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1).
 */
class PauliTerm {
  public:
    static constexpr std::size_t kMaxQubits = 30;

    PauliTerm() = default;

    /// Parses a compact letter string such as "XZI". Throws on bad letters.
    explicit PauliTerm(std::string_view letters);

    static PauliTerm identity(std::size_t n_qubits);
    static PauliTerm from_masks(std::size_t n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask);
    /// Single non-trivial letter on `qubit`, identity elsewhere.
    static PauliTerm single(std::size_t n_qubits, std::size_t qubit,
                            char letter);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const { return z_; }
    [[nodiscard]] char letter(std::size_t qubit) const;
    [[nodiscard]] std::string letters() const;
    [[nodiscard]] bool is_identity() const { return (x_ | z_) == 0; }
    /// Number of Y letters; Y = i X Z per qubit.
    [[nodiscard]] int y_count() const;
    /// Number of non-identity letters.
    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool commutes_with(const PauliTerm &other) const;

    friend bool operator==(const PauliTerm &a, const PauliTerm &b) {
        return a.n_qubits_ == b.n_qubits_ && a.x_ == b.x_ && a.z_ == b.z_;
    }

  private:
    std::size_t n_qubits_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

struct PauliTermHash {
    std::size_t operator()(const PauliTerm &p) const noexcept {
        return std::hash<std::uint64_t>{}(p.x_mask() * 0x9E3779B97F4A7C15ULL ^
                                          p.z_mask() ^ (p.n_qubits() << 58));
    }
};

/// Result of multiplying two Pauli strings: p * q = phase * term.
struct PauliProduct {
    cplx phase;
    PauliTerm term;
};

PauliProduct pauli_product(const PauliTerm &p, const PauliTerm &q);

/// All 4^n strings in lexicographic order with I < X < Y < Z per qubit.
std::vector<PauliTerm> full_pauli_basis(std::size_t n_qubits);

struct WeightedTerm {
    double coefficient;
    PauliTerm term;
};

/**
 * @brief H = sum_r a_r P_r over distinct Pauli strings.
 *
 * Construction merges duplicate strings by summing coefficients (keeping
 * first-occurrence order) and drops terms whose merged coefficient is
 * exactly zero. At least one term must survive.
 */
class Hamiltonian {
  public:
    explicit Hamiltonian(std::vector<WeightedTerm> terms);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::vector<WeightedTerm> &terms() const {
        return terms_;
    }
    [[nodiscard]] const WeightedTerm &operator[](std::size_t r) const {
        return terms_[r];
    }
    [[nodiscard]] Eigen::VectorXd coefficients() const;
    /// sum_r a_r^2
    [[nodiscard]] double coefficient_norm_squared() const;
    /// Returns c * H.
    [[nodiscard]] Hamiltonian scaled(double c) const;

    friend bool operator==(const Hamiltonian &a, const Hamiltonian &b);

  private:
    std::size_t n_qubits_ = 0;
    std::vector<WeightedTerm> terms_;
};

/// Unit-coefficient Hamiltonian over the full 4^n basis.
Hamiltonian full_basis_hamiltonian(std::size_t n_qubits);

Hamiltonian parse_hamiltonian(std::string_view text);
Hamiltonian load_hamiltonian(const std::string &path);
/// One "<coefficient> <letters>" line per term, coefficients with 17
/// significant digits.
std::string serialize_hamiltonian(const Hamiltonian &h);

constexpr std::size_t kDenseQubitLimit = 12;
constexpr std::size_t kBasisQubitLimit = 6;

Eigen::MatrixXcd dense_matrix(const PauliTerm &p);
Eigen::MatrixXcd dense_matrix(const Hamiltonian &h);

} // namespace hqng
