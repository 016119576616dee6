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

#include <cmath>
#include <numbers>
#include <random>

#include "hqng/errors.hpp"
#include "hqng/optimizers.hpp"
#include "hqng/oracle.hpp"
#include "support/random_instances.hpp"

using namespace hqng;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

Ansatz ry_ansatz() {
    return Ansatz(1, {gates::PauliRotation{PauliTerm("Y"), 0}});
}

Hamiltonian two_qubit_hamiltonian() {
    return parse_hamiltonian(
        "1 XI\n1 YI\n1 ZI\n1 IX\n1 IY\n1 IZ\n1 XX\n1 YY\n1 ZZ\n");
}

Ansatz two_qubit_ansatz() {
    return parse_ansatz("qubits 2\nRY q0 p0\nCNOT q0 q1\nRX q1 p1\n");
}

OptimizerConfig config_for(Method method, double eta,
                           InversePolicy policy = inverse::ExactSolve{}) {
    OptimizerConfig c;
    c.method = method;
    c.eta = eta;
    c.inverse_policy = policy;
    return c;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (double x : v) {
        out[k++] = x;
    }
    return out;
}

double wrap(double x) { return std::remainder(x, 2.0 * kPi); }

} // namespace

TEST_CASE("method names", "[optimizers]") {
    CHECK(parse_method("H-QNG") == Method::HQNG);
    CHECK(parse_method("op-vqite") == Method::OPVQITE);
    CHECK(parse_method("VG") == Method::VG);
    CHECK(to_string(parse_method("qng")) == "qng");
    CHECK_THROWS_AS(parse_method("adam"), std::invalid_argument);
}

TEST_CASE("config invariants", "[optimizers]") {
    OptimizerConfig c;
    CHECK_NOTHROW(c.validate());
    c.eta = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.eta = 0.1;
    c.max_steps = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.max_steps = 1;
    c.shots = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("VG step", "[optimizers]") {
    const auto z = parse_hamiltonian("1 Z");
    const Optimizer vg(ry_ansatz(), z, config_for(Method::VG, 0.1));
    auto exact = ExpectationEstimator::exact();

    const auto still = vg.vg_step(vec({0.0}), exact);
    CHECK(still.stationary());
    CHECK(still.params[0] == 0.0);

    const auto moved = vg.vg_step(vec({kPi / 2}), exact);
    CHECK(moved.params[0] == Approx(kPi / 2 + 0.1).margin(1e-15));

    auto meter = ExpectationEstimator::exact();
    const Optimizer two_qubit(two_qubit_ansatz(), two_qubit_hamiltonian(),
                         config_for(Method::VG, 0.1));
    (void)two_qubit.step(vec({0.3, 0.2}), meter);
    CHECK(meter.quantities() == 36);
    CHECK(estimations_per_step(Method::VG, two_qubit_ansatz(), two_qubit_hamiltonian()) ==
          36);
}

TEST_CASE("QNG step", "[optimizers]") {
    const auto z = parse_hamiltonian("1 Z");
    const double eta = 0.05;
    const Optimizer qng(ry_ansatz(), z, config_for(Method::QNG, eta));
    auto exact = ExpectationEstimator::exact();
    for (double theta : {0.4, 1.2, -2.0}) {
        const auto s = qng.qng_step(vec({theta}), exact);
        CHECK(s.params[0] ==
              Approx(theta + 4 * eta * std::sin(theta)).margin(1e-14));
    }

    // A dominant ridge turns QNG into VG scaled by 1 / lambda.
    const auto h = two_qubit_hamiltonian();
    const double lambda = 1e8;
    const Optimizer ridge(two_qubit_ansatz(), h,
                          config_for(Method::QNG, eta, inverse::Regularized{lambda}));
    const Optimizer plain(two_qubit_ansatz(), h, config_for(Method::VG, eta));
    const auto g = plain.direction(vec({0.3, 0.2}));
    CHECK((lambda * ridge.direction(vec({0.3, 0.2})) - g).norm() <
          1e-6 * g.norm());

    auto meter = ExpectationEstimator::exact();
    const Optimizer two_qubit(two_qubit_ansatz(), two_qubit_hamiltonian(),
                         config_for(Method::QNG, 0.1));
    (void)two_qubit.step(vec({0.3, 0.2}), meter);
    CHECK(meter.quantities() == 48);
    CHECK(estimations_per_step(Method::QNG, two_qubit_ansatz(),
                               two_qubit_hamiltonian()) == 48);
}

TEST_CASE("H-QNG step", "[optimizers]") {
    auto exact = ExpectationEstimator::exact();
    std::mt19937_64 rng(41);
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto h = full_basis_hamiltonian(n);
        const auto ansatz = testing::random_ansatz(n, 2, rng, n);
        const auto p = testing::random_angles(2, rng);
        const Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(p.data(), 2);
        const Optimizer q(ansatz, h, config_for(Method::QNG, 0.05,
                                                inverse::Regularized{0.1}));
        const Optimizer t(ansatz, h, config_for(Method::HQNG, 0.05,
                                                inverse::Regularized{0.1}));
        CHECK((q.step(theta, exact).params - t.step(theta, exact).params)
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }

    const auto h = parse_hamiltonian("-1 X\n-1 Y\n");
    const Optimizer hq(ry_ansatz(), h, config_for(Method::HQNG, 0.01));
    for (double theta : {0.3, -1.0, 2.2}) {
        const auto d = hq.direction(vec({theta}));
        CHECK(d[0] == Approx(-2 * std::sqrt(2.0) / std::cos(theta)).epsilon(1e-12));
        const auto s = hq.hqng_step(vec({theta}), exact);
        CHECK(std::abs(s.params[0] - theta) ==
              Approx(0.01 * 2 * std::sqrt(2.0) / std::abs(std::cos(theta)))
                  .epsilon(1e-12));
    }

    auto meter = ExpectationEstimator::exact();
    const Optimizer two_qubit(two_qubit_ansatz(), two_qubit_hamiltonian(),
                         config_for(Method::HQNG, 0.1));
    (void)two_qubit.step(vec({0.3, 0.2}), meter);
    CHECK(meter.quantities() == 36);
}

TEST_CASE("H-QNG direction is invariant under Hamiltonian scaling",
          "[optimizers]") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto ansatz = testing::random_ansatz(3, 3, rng);
        const auto h = testing::random_hamiltonian(3, 6, rng);
        const auto p = testing::random_angles(3, rng);
        const Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(p.data(), 3);
        const auto base =
            Optimizer(ansatz, h, config_for(Method::HQNG, 0.1, inverse::PseudoInverse{}))
                .direction(theta);
        for (double c : {0.5, 2.0, 10.0}) {
            const auto hc = h.scaled(c);
            const auto scaled =
                Optimizer(ansatz, hc, config_for(Method::HQNG, 0.1, inverse::PseudoInverse{}))
                    .direction(theta);
            CHECK((scaled - base).cwiseAbs().maxCoeff() <
                  1e-10 * std::max(1.0, base.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("OP-VQITE step", "[optimizers]") {
    auto exact = ExpectationEstimator::exact();
    const auto z = parse_hamiltonian("1 Z");
    const Optimizer op(ry_ansatz(), z, config_for(Method::OPVQITE, 0.1));
    const auto s = op.op_vqite_step(vec({0.0}), exact);
    CHECK(s.stationary());
    CHECK(s.params[0] == 0.0);

    const auto h = two_qubit_hamiltonian();
    const auto per_step = estimations_per_step(Method::OPVQITE, two_qubit_ansatz(), h);
    CHECK(per_step > estimations_per_step(Method::HQNG, two_qubit_ansatz(), h));
    auto meter = ExpectationEstimator::exact();
    const Optimizer two_qubit(two_qubit_ansatz(), h, config_for(Method::OPVQITE, 0.01));
    (void)two_qubit.step(vec({0.3, 0.2}), meter);
    CHECK(meter.quantities() == per_step);
}

TEST_CASE("run records and cost meter", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    const auto ansatz = two_qubit_ansatz();
    const double ground = oracle::ground_state(h).energy;
    for (Method method :
         {Method::VG, Method::QNG, Method::HQNG, Method::OPVQITE}) {
        auto c = config_for(method, 0.01, inverse::Regularized{0.1});
        c.max_steps = 15;
        const auto rec = run(ansatz, h, c, vec({-0.4, 2.0}), ground);
        REQUIRE(rec.steps() == 15);
        CHECK(rec.energy.size() == 16);
        CHECK(rec.delta_e.size() == 16);
        CHECK(rec.params.size() == 16);
        CHECK(rec.status == RunStatus::BudgetExhausted);
        const auto per_step = estimations_per_step(method, ansatz, h);
        for (std::size_t k = 0; k <= rec.steps(); ++k) {
            CHECK(rec.cumulative_estimations[k] == k * per_step);
        }
    }

    auto one = config_for(Method::VG, 0.1);
    one.max_steps = 1;
    CHECK(run(ansatz, h, one, vec({0.1, 0.1})).energy.size() == 2);
    CHECK_THROWS_AS(run(ansatz, h, one, vec({0.1})), DimensionError);
}

TEST_CASE("run is deterministic for a fixed seed", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    auto c = config_for(Method::QNG, 0.05, inverse::Regularized{0.1});
    c.max_steps = 20;
    c.shots = 256;
    c.seed = 9;
    const auto a = run(two_qubit_ansatz(), h, c, vec({-0.4, 2.0}));
    const auto b = run(two_qubit_ansatz(), h, c, vec({-0.4, 2.0}));
    CHECK(a.energy == b.energy);
    for (std::size_t k = 0; k < a.params.size(); ++k) {
        CHECK(a.params[k] == b.params[k]);
    }
    c.seed = 10;
    CHECK(run(two_qubit_ansatz(), h, c, vec({-0.4, 2.0})).energy != a.energy);
}

TEST_CASE("two-qubit runs reach the analytic optimum", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    const auto ansatz = two_qubit_ansatz();
    for (Method method : {Method::QNG, Method::HQNG}) {
        auto c = config_for(method, 0.05, inverse::Regularized{0.1});
        c.max_steps = 400;
        const auto rec = run(ansatz, h, c, vec({-0.4, 2.0}));
        const auto &theta = rec.params.back();
        CHECK(std::abs(wrap(theta[0] + kPi / 2)) < 1e-5);
        CHECK(std::abs(wrap(theta[1] - kPi)) < 1e-5);
        auto exact = ExpectationEstimator::exact();
        const auto tj = parameter_shift_jacobian(
            ansatz, h, std::vector<double>{theta[0], theta[1]}, exact);
        CHECK(gradient(h, tj).norm() < 1e-6);
    }
}

TEST_CASE("energy traces decrease on the two-qubit instance", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    for (Method method :
         {Method::VG, Method::QNG, Method::HQNG, Method::OPVQITE}) {
        auto c = config_for(method, 0.01, inverse::Regularized{0.1});
        c.max_steps = 300;
        const auto rec = run(two_qubit_ansatz(), h, c, vec({-0.4, 2.0}));
        for (std::size_t k = 1; k < rec.energy.size(); ++k) {
            CHECK(rec.energy[k] <= rec.energy[k - 1] + 1e-12);
        }
    }
}

TEST_CASE("singular metric ends the run with a status", "[optimizers]") {
    const Ansatz two(1, {gates::PauliRotation{PauliTerm("Y"), 0},
                         gates::PauliRotation{PauliTerm("X"), 1}});
    const auto z = parse_hamiltonian("1 Z");
    auto c = config_for(Method::HQNG, 0.1, inverse::ExactSolve{});
    const auto rec = run(two, z, c, vec({0.3, 0.4}));
    CHECK(rec.status == RunStatus::SingularMetric);
    CHECK(rec.steps() == 0);
    CHECK_FALSE(rec.message.empty());
}

TEST_CASE("energy tolerance stops the run", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    auto c = config_for(Method::QNG, 0.05, inverse::Regularized{0.1});
    c.max_steps = 400;
    c.energy_tolerance = 1e-3;
    const auto rec = run(two_qubit_ansatz(), h, c, vec({-0.4, 2.0}), -3.0);
    CHECK(rec.status == RunStatus::Converged);
    CHECK(rec.delta_e.back() <= 1e-3);
    CHECK(rec.delta_e[rec.delta_e.size() - 2] > 1e-3);
    CHECK(rec.first_step_below(1e-3) == rec.steps());
}

TEST_CASE("continuous trajectory", "[optimizers]") {
    const auto h = two_qubit_hamiltonian();
    const auto ansatz = two_qubit_ansatz();
    const auto start = vec({-0.4, 2.0});
    auto c = config_for(Method::HQNG, 0.01);
    c.max_steps = 30;
    const auto trace = run(ansatz, h, c, start);
    const auto path =
        continuous_trajectory(ansatz, h, Method::HQNG, 0.3, 0.01, start);
    REQUIRE(path.size() == trace.circuit_params.size());
    for (std::size_t k = 0; k < path.size(); ++k) {
        CHECK(path[k] == trace.circuit_params[k]);
    }

    const auto coarse =
        continuous_trajectory(ansatz, h, Method::QNG, 0.4, 0.02, start).back();
    const auto fine =
        continuous_trajectory(ansatz, h, Method::QNG, 0.4, 0.01, start).back();
    const auto finer =
        continuous_trajectory(ansatz, h, Method::QNG, 0.4, 0.005, start).back();
    const double e1 = (coarse - fine).cwiseAbs().maxCoeff();
    const double e2 = (fine - finer).cwiseAbs().maxCoeff();
    CHECK(e2 < e1);
    CHECK(e1 / e2 == Approx(2.0).epsilon(0.2));

    const auto z = parse_hamiltonian("1 Z");
    const auto flat =
        continuous_trajectory(ry_ansatz(), z, Method::QNG, 1.0, 0.1, vec({0.0}));
    for (const auto &p : flat) {
        CHECK(p[0] == 0.0);
    }
    CHECK_THROWS(continuous_trajectory(ry_ansatz(), z, Method::VG, 1.0, 0.1,
                                       vec({0.0})));
    CHECK_THROWS(continuous_trajectory(ry_ansatz(), z, Method::QNG, 1.0, 0.0,
                                       vec({0.0})));
}

TEST_CASE("reparameterized trajectories coincide for natural methods",
          "[optimizers][reparam]") {
    const auto h = two_qubit_hamiltonian();
    const auto ansatz = two_qubit_ansatz();
    const auto start = vec({-0.4, 2.0});
    for (Method method : {Method::QNG, Method::HQNG}) {
        const auto base = continuous_trajectory(ansatz, h, method, 0.05, 0.001,
                                                start, inverse::ExactSolve{});
        for (const char *name : {"t1", "t2", "t3"}) {
            const auto other = continuous_trajectory(
                ansatz, h, method, 0.05, 0.001, start, inverse::ExactSolve{},
                named_reparameterization(name, 2));
            REQUIRE(other.size() == base.size());
            CHECK((other.front() - start).cwiseAbs().maxCoeff() < 1e-14);
            for (std::size_t k = 0; k < base.size(); ++k) {
                CHECK((other[k] - base[k]).cwiseAbs().maxCoeff() < 1e-3);
            }
        }
    }
}

TEST_CASE("reparameterization maps", "[reparam]") {
    const auto t3 = named_reparameterization("t3", 2);
    const Eigen::Vector2d psi(0.4, -2.9);
    const auto theta = t3.to_circuit(psi);
    CHECK(theta[0] == Approx(2 * std::atan(2 * std::tan(0.2))));
    CHECK((t3.from_circuit(theta) - psi).cwiseAbs().maxCoeff() < 1e-14);
    const double step = 1e-6;
    for (int i = 0; i < 2; ++i) {
        Eigen::VectorXd up = psi;
        Eigen::VectorXd down = psi;
        up[i] += step;
        down[i] -= step;
        const double fd = (t3.to_circuit(up)[i] - t3.to_circuit(down)[i]) / (2 * step);
        CHECK(t3.jacobian(psi)(i, i) == Approx(fd).epsilon(1e-8));
    }
    const auto t1 = named_reparameterization("t1", 3);
    CHECK(t1.to_circuit(Eigen::Vector3d(1, 1, 1)) == Eigen::Vector3d(0.8, 1.2, 0.8));
    CHECK(named_reparameterization("t2", 2).to_circuit(Eigen::Vector2d(1, 1)) ==
          Eigen::Vector2d(1.2, 0.8));
    CHECK(named_reparameterization("identity", 2).is_identity());
    CHECK_THROWS_AS(named_reparameterization("t9", 2), std::invalid_argument);
}
