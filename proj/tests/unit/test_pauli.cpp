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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hqng/errors.hpp"
#include "hqng/oracle.hpp"
#include "hqng/pauli.hpp"
#include "support/random_instances.hpp"

using namespace hqng;
using Catch::Matchers::ContainsSubstring;

namespace {

double max_abs(const Eigen::MatrixXcd &m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = cplx{g(rng), g(rng)};
        }
    }
    return 0.5 * (m + m.adjoint());
}

} // namespace

TEST_CASE("PauliTerm letters and masks", "[pauli]") {
    const PauliTerm p("XYZI");
    CHECK(p.n_qubits() == 4);
    CHECK(p.letters() == "XYZI");
    CHECK(p.letter(1) == 'Y');
    CHECK(p.weight() == 3);
    CHECK(p.y_count() == 1);
    CHECK_FALSE(p.is_identity());
    CHECK(PauliTerm::identity(3).letters() == "III");
    CHECK(PauliTerm::single(3, 2, 'Z').letters() == "IIZ");
    CHECK(PauliTerm::from_masks(2, p.x_mask() >> 2, p.z_mask() >> 2) ==
          PauliTerm("XY"));
    CHECK_THROWS_AS(PauliTerm("XQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliTerm(""), std::invalid_argument);
}

TEST_CASE("pauli_product single-qubit table", "[pauli]") {
    const cplx i{0.0, 1.0};
    auto xy = pauli_product(PauliTerm("X"), PauliTerm("Y"));
    CHECK(xy.term == PauliTerm("Z"));
    CHECK(xy.phase == i);
    auto yx = pauli_product(PauliTerm("Y"), PauliTerm("X"));
    CHECK(yx.phase == -i);
    auto zz = pauli_product(PauliTerm("Z"), PauliTerm("Z"));
    CHECK(zz.term == PauliTerm("I"));
    CHECK(zz.phase == cplx{1.0, 0.0});
    auto disjoint = pauli_product(PauliTerm("XI"), PauliTerm("IY"));
    CHECK(disjoint.term == PauliTerm("XY"));
    CHECK(disjoint.phase == cplx{1.0, 0.0});
    CHECK_THROWS_AS(pauli_product(PauliTerm("X"), PauliTerm("XX")),
                    DimensionError);
}

TEST_CASE("pauli_product matches dense multiplication", "[pauli]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto p = testing::uniform_pauli(n, rng);
        const auto q = testing::uniform_pauli(n, rng);
        const auto pq = pauli_product(p, q);
        const Eigen::MatrixXcd lhs = dense_matrix(p) * dense_matrix(q);
        CHECK(max_abs(lhs - pq.phase * dense_matrix(pq.term)) == 0.0);
        CHECK(p.commutes_with(q) ==
              (max_abs(lhs - dense_matrix(q) * dense_matrix(p)) == 0.0));
        CHECK(pauli_product(p, p).term.is_identity());
        CHECK(pauli_product(p, p).phase == cplx{1.0, 0.0});
    }
}

TEST_CASE("full_pauli_basis ordering and guard", "[pauli]") {
    const auto b1 = full_pauli_basis(1);
    REQUIRE(b1.size() == 4);
    CHECK(b1[0].letters() == "I");
    CHECK(b1[1].letters() == "X");
    CHECK(b1[2].letters() == "Y");
    CHECK(b1[3].letters() == "Z");
    const auto b2 = full_pauli_basis(2);
    REQUIRE(b2.size() == 16);
    CHECK(b2[0].letters() == "II");
    CHECK(b2[1].letters() == "IX");
    CHECK(b2[2].letters() == "IY");
    CHECK(b2[3].letters() == "IZ");
    CHECK(b2[4].letters() == "XI");
    CHECK(full_pauli_basis(3).size() == 64);
    CHECK_THROWS_AS(full_pauli_basis(7), SizeLimitError);
}

TEST_CASE("Hamiltonian merges duplicates and drops zeros", "[pauli]") {
    const auto h = parse_hamiltonian("0.5 X\n0.5 X\n");
    REQUIRE(h.size() == 1);
    CHECK(h[0].coefficient == 1.0);
    CHECK(h[0].term == PauliTerm("X"));

    const auto cancel = parse_hamiltonian("1 Z\n0.25 X\n-1 Z\n");
    REQUIRE(cancel.size() == 1);
    CHECK(cancel[0].term == PauliTerm("X"));

    const auto order = parse_hamiltonian("1 Z\n2 X\n3 Z\n4 Y\n");
    REQUIRE(order.size() == 3);
    CHECK(order[0].term == PauliTerm("Z"));
    CHECK(order[0].coefficient == 4.0);
    CHECK(order[1].term == PauliTerm("X"));
    CHECK(order[2].term == PauliTerm("Y"));

    CHECK_THROWS(parse_hamiltonian("1 Z\n-1 Z\n"));
    CHECK(order.coefficient_norm_squared() == 16.0 + 4.0 + 16.0);
    CHECK(order.scaled(2.0)[0].coefficient == 8.0);
}

TEST_CASE("parse_hamiltonian accepts the documented format", "[pauli]") {
    const auto h = parse_hamiltonian("# comment\n\n-1.0 X\n-1.0 Y\n");
    REQUIRE(h.size() == 2);
    CHECK(h.n_qubits() == 1);
    CHECK(h[0].coefficient == -1.0);
    CHECK(h[1].term == PauliTerm("Y"));
    CHECK(parse_hamiltonian("+2.5e-1 ZZ").terms()[0].coefficient == 0.25);
}

TEST_CASE("parse_hamiltonian reports errors with line numbers", "[pauli]") {
    auto fails_on = [](const char *text, std::size_t line,
                       const char *needle) {
        try {
            parse_hamiltonian(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError &e) {
            CHECK(e.line() == line);
            CHECK_THAT(e.what(), ContainsSubstring(needle));
        }
    };
    fails_on("1.0 Z\nabc X\n", 2, "coefficient");
    fails_on("1.0 Z\n1.0 XQ\n", 2, "Q");
    fails_on("1.0 Z\n\n1.0 XX\n", 3, "length");
    fails_on("# nothing\n", 1, "no Hamiltonian terms");
    fails_on("", 0, "no Hamiltonian terms");
    fails_on("1.0 X extra\n", 1, "trailing");
    fails_on("1.0\n", 1, "expected");
}

TEST_CASE("serialize and parse round-trip", "[pauli]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = testing::random_hamiltonian(3, 1 + trial % 10, rng);
        CHECK(parse_hamiltonian(serialize_hamiltonian(h)) == h);
    }
}

TEST_CASE("dense_matrix examples", "[pauli]") {
    const auto z = dense_matrix(parse_hamiltonian("1.0 Z"));
    CHECK(z(0, 0) == cplx{1.0, 0.0});
    CHECK(z(1, 1) == cplx{-1.0, 0.0});
    CHECK(z(0, 1) == cplx{0.0, 0.0});

    const auto xy = dense_matrix(parse_hamiltonian("-1.0 X\n-1.0 Y"));
    CHECK(xy(0, 0) == cplx{0.0, 0.0});
    CHECK(xy(0, 1) == cplx{-1.0, 1.0});
    CHECK(xy(1, 0) == cplx{-1.0, -1.0});

    const auto xx = dense_matrix(parse_hamiltonian("1.0 XX"));
    Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
        anti(k, 3 - k) = 1.0;
    }
    CHECK(max_abs(xx - anti) == 0.0);
}

TEST_CASE("dense_matrix agrees with Kronecker products and is Hermitian",
          "[pauli]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto p = testing::uniform_pauli(n, rng);
        CHECK(max_abs(dense_matrix(p) - oracle::kron_pauli(p)) == 0.0);
        const auto h = testing::random_hamiltonian(n, 1 + trial % 5, rng);
        const auto m = dense_matrix(h);
        CHECK(max_abs(m - m.adjoint()) < 1e-12);
    }
    CHECK_THROWS_AS(dense_matrix(PauliTerm(std::string(13, 'Z'))),
                    SizeLimitError);
}

TEST_CASE("swap identity over the full Pauli basis", "[pauli]") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto basis = full_pauli_basis(n);
        const auto dim = std::size_t{1} << n;
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_hermitian(dim, rng);
            const auto b = random_hermitian(dim, rng);
            cplx lhs = 0.0;
            for (const auto &p : basis) {
                const auto pm = dense_matrix(p);
                lhs += (a * pm).trace() * (b * pm).trace();
            }
            const cplx rhs = static_cast<double>(dim) * (a * b).trace();
            CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}
