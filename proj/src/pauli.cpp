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

#include "hqng/pauli.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hqng/errors.hpp"
#include "hqng/format.hpp"

namespace hqng {

namespace {

std::uint64_t qubit_bit(std::size_t n_qubits, std::size_t qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

void set_letter(std::size_t n, std::size_t q, char c, std::uint64_t &x,
                std::uint64_t &z) {
    const auto bit = qubit_bit(n, q);
    switch (c) {
    case 'I':
        break;
    case 'X':
        x |= bit;
        break;
    case 'Y':
        x |= bit;
        z |= bit;
        break;
    case 'Z':
        z |= bit;
        break;
    default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                    "'");
    }
}

} // namespace

PauliTerm::PauliTerm(std::string_view letters) : n_qubits_(letters.size()) {
    if (n_qubits_ == 0 || n_qubits_ > kMaxQubits) {
        throw std::invalid_argument("Pauli string length must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        set_letter(n_qubits_, q, letters[q], x_, z_);
    }
}

PauliTerm PauliTerm::identity(std::size_t n_qubits) {
    return from_masks(n_qubits, 0, 0);
}

PauliTerm PauliTerm::from_masks(std::size_t n_qubits, std::uint64_t x_mask,
                                std::uint64_t z_mask) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    if ((x_mask | z_mask) & ~full) {
        throw std::invalid_argument("Pauli mask exceeds qubit count");
    }
    PauliTerm p;
    p.n_qubits_ = n_qubits;
    p.x_ = x_mask;
    p.z_ = z_mask;
    return p;
}

PauliTerm PauliTerm::single(std::size_t n_qubits, std::size_t qubit,
                            char letter) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    set_letter(n_qubits, qubit, letter, x, z);
    return from_masks(n_qubits, x, z);
}

char PauliTerm::letter(std::size_t qubit) const {
    const auto bit = qubit_bit(n_qubits_, qubit);
    const bool x = x_ & bit;
    const bool z = z_ & bit;
    if (x && z) {
        return 'Y';
    }
    return x ? 'X' : (z ? 'Z' : 'I');
}

std::string PauliTerm::letters() const {
    std::string s(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        s[q] = letter(q);
    }
    return s;
}

int PauliTerm::y_count() const { return std::popcount(x_ & z_); }

std::size_t PauliTerm::weight() const {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

bool PauliTerm::commutes_with(const PauliTerm &other) const {
    const int sym = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
    return sym % 2 == 0;
}

PauliProduct pauli_product(const PauliTerm &p, const PauliTerm &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw DimensionError("pauli_product: qubit counts differ");
    }
    // Write each string as i^{y} X^x Z^z. Moving Z^{z_p} past X^{x_q}
    // contributes (-1)^{|z_p & x_q|}.
    const auto x = p.x_mask() ^ q.x_mask();
    const auto z = p.z_mask() ^ q.z_mask();
    const PauliTerm term = PauliTerm::from_masks(p.n_qubits(), x, z);
    int power = p.y_count() + q.y_count() - term.y_count() +
                2 * std::popcount(p.z_mask() & q.x_mask());
    power = ((power % 4) + 4) % 4;
    static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {kPowers[power], term};
}

std::vector<PauliTerm> full_pauli_basis(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kBasisQubitLimit) {
        throw SizeLimitError("full_pauli_basis: n must be in [1, " +
                             std::to_string(kBasisQubitLimit) + "]");
    }
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    const std::size_t count = std::size_t{1} << (2 * n_qubits);
    std::vector<PauliTerm> basis;
    basis.reserve(count);
    std::string letters(n_qubits, 'I');
    for (std::size_t k = 0; k < count; ++k) {
        // base-4 digits of k, qubit 0 most significant
        std::size_t rest = k;
        for (std::size_t q = n_qubits; q-- > 0;) {
            letters[q] = kLetters[rest & 3U];
            rest >>= 2;
        }
        basis.emplace_back(letters);
    }
    return basis;
}

Hamiltonian::Hamiltonian(std::vector<WeightedTerm> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("Hamiltonian needs at least one term");
    }
    n_qubits_ = terms.front().term.n_qubits();
    std::unordered_map<PauliTerm, std::size_t, PauliTermHash> index;
    for (auto &t : terms) {
        if (t.term.n_qubits() != n_qubits_) {
            throw DimensionError("Hamiltonian terms have different lengths");
        }
        auto [it, inserted] = index.try_emplace(t.term, terms_.size());
        if (inserted) {
            terms_.push_back(t);
        } else {
            terms_[it->second].coefficient += t.coefficient;
        }
    }
    std::erase_if(terms_,
                  [](const WeightedTerm &t) { return t.coefficient == 0.0; });
    if (terms_.empty()) {
        throw std::invalid_argument(
            "Hamiltonian has no terms with non-zero coefficient");
    }
}

Eigen::VectorXd Hamiltonian::coefficients() const {
    Eigen::VectorXd a(terms_.size());
    for (std::size_t r = 0; r < terms_.size(); ++r) {
        a[static_cast<Eigen::Index>(r)] = terms_[r].coefficient;
    }
    return a;
}

double Hamiltonian::coefficient_norm_squared() const {
    double s = 0.0;
    for (const auto &t : terms_) {
        s += t.coefficient * t.coefficient;
    }
    return s;
}

Hamiltonian Hamiltonian::scaled(double c) const {
    auto terms = terms_;
    for (auto &t : terms) {
        t.coefficient *= c;
    }
    return Hamiltonian(std::move(terms));
}

bool operator==(const Hamiltonian &a, const Hamiltonian &b) {
    if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t r = 0; r < a.terms_.size(); ++r) {
        if (a.terms_[r].coefficient != b.terms_[r].coefficient ||
            !(a.terms_[r].term == b.terms_[r].term)) {
            return false;
        }
    }
    return true;
}

Hamiltonian full_basis_hamiltonian(std::size_t n_qubits) {
    std::vector<WeightedTerm> terms;
    for (auto &p : full_pauli_basis(n_qubits)) {
        terms.push_back({1.0, std::move(p)});
    }
    return Hamiltonian(std::move(terms));
}

Hamiltonian parse_hamiltonian(std::string_view text) {
    std::vector<WeightedTerm> terms;
    std::size_t n_qubits = 0;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string coeff_text;
        if (!(fields >> coeff_text) || coeff_text.front() == '#') {
            continue;
        }
        std::string letters;
        if (!(fields >> letters)) {
            throw ParseError(line_no, "expected '<coefficient> <letters>'");
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError(line_no, "trailing text '" + extra + "'");
        }
        double coefficient = 0.0;
        const char *begin = coeff_text.data();
        const char *end = begin + coeff_text.size();
        if (*begin == '+') {
            ++begin;
        }
        auto [ptr, ec] = std::from_chars(begin, end, coefficient);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError(line_no,
                             "malformed coefficient '" + coeff_text + "'");
        }
        PauliTerm term;
        try {
            term = PauliTerm(letters);
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
        if (n_qubits == 0) {
            n_qubits = term.n_qubits();
        } else if (term.n_qubits() != n_qubits) {
            throw ParseError(line_no, "Pauli string length " +
                                          std::to_string(term.n_qubits()) +
                                          " differs from " +
                                          std::to_string(n_qubits));
        }
        terms.push_back({coefficient, term});
    }
    if (terms.empty()) {
        throw ParseError(line_no, "no Hamiltonian terms found");
    }
    try {
        return Hamiltonian(std::move(terms));
    } catch (const std::invalid_argument &e) {
        throw ParseError(line_no, e.what());
    }
}

Hamiltonian load_hamiltonian(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open Hamiltonian file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_hamiltonian(buffer.str());
    } catch (const ParseError &e) {
        throw ParseError(path, e.line(), e.detail());
    }
}

std::string serialize_hamiltonian(const Hamiltonian &h) {
    std::string out;
    for (const auto &t : h.terms()) {
        out += format_double(t.coefficient);
        out += ' ';
        out += t.term.letters();
        out += '\n';
    }
    return out;
}

namespace {

// P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>
void accumulate_dense(Eigen::MatrixXcd &m, const PauliTerm &p, double weight) {
    static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx y_phase = weight * kPowers[p.y_count() % 4];
    const Eigen::Index dim = m.rows();
    for (Eigen::Index b = 0; b < dim; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        const double sign =
            (std::popcount(ub & p.z_mask()) % 2 == 0) ? 1.0 : -1.0;
        m(static_cast<Eigen::Index>(ub ^ p.x_mask()), b) += y_phase * sign;
    }
}

void check_dense_size(std::size_t n_qubits) {
    if (n_qubits > kDenseQubitLimit) {
        throw SizeLimitError("dense_matrix: more than " +
                             std::to_string(kDenseQubitLimit) + " qubits");
    }
}

} // namespace

Eigen::MatrixXcd dense_matrix(const PauliTerm &p) {
    check_dense_size(p.n_qubits());
    const Eigen::Index dim = Eigen::Index{1} << p.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    accumulate_dense(m, p, 1.0);
    return m;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian &h) {
    check_dense_size(h.n_qubits());
    const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : h.terms()) {
        accumulate_dense(m, t.term, t.coefficient);
    }
    return m;
}

} // namespace hqng
