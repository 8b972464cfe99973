// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/gates.hpp"

using namespace spinnet;
using std::numbers::pi;

TEST(GateUnitary, RotationsUsePlusSignAndFullAngle) {
    for (double t : {0.0, 0.3, -1.2, pi / 2}) {
        EXPECT_LT(oracle::max_abs(gate_unitary(GateKind::Rx, t) - oracle::rot(oracle::pauli_x(), t)), 1e-15);
        EXPECT_LT(oracle::max_abs(gate_unitary(GateKind::Rz, t) - oracle::rot(oracle::pauli_z(), t)), 1e-15);
    }
    // A 50/50 splitter: Rx(pi/4) has equal-magnitude entries.
    const Matrix bs = gate_unitary(GateKind::Rx, pi / 4);
    EXPECT_NEAR(std::abs(bs(0, 1)), std::abs(bs(0, 0)), 1e-15);
}

TEST(GateUnitary, AngleArgumentChecked) {
    EXPECT_THROW(gate_unitary(GateKind::Rx), Error);
    EXPECT_THROW(gate_unitary(GateKind::H, 0.1), Error);
    EXPECT_THROW(gate_unitary(GateKind::P, std::numeric_limits<double>::infinity()), Error);
}

TEST(GateOp, ValidateRejectsWrongArity) {
    GateOp op{GateKind::CNOT, std::nullopt, {spin(0)}};
    EXPECT_THROW(op.validate(), Error);
    EXPECT_THROW(make_gate(GateKind::CNOT, spin(0), spin(0)), Error);
}

TEST(EmbedOp, ControlIsFirstTarget) {
    // CNOT(k0 -> s0) maps |up; 1> to |down; 1>.
    const Unitary u = embed_op(make_gate(GateKind::CNOT, mode(0), spin(0)), 1);
    EXPECT_NEAR(std::abs(u(3, 2)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1)), 1.0, 1e-15);
    // Against the textbook-order Kronecker oracle on a wider register.
    const GateOp op = make_gate(GateKind::Cphase, 0.4, mode(2), spin(0));
    EXPECT_LT(oracle::max_abs(embed_op(op, 3) - oracle::embed2_textbook(op.matrix(), 5, 0, 6)), 1e-14);
}

TEST(Circuit, UnitaryMatchesStepwiseRun) {
    std::mt19937_64 rng(3);
    Circuit c{.n_electrons = 2, .ops = {}};
    c.add(make_gate(GateKind::H, spin(1)));
    c.add(make_gate(GateKind::CNOT, spin(1), mode(0)));
    c.add(make_gate(GateKind::Rx, 0.37, mode(1)));
    c.add(make_gate(GateKind::Cphase, 1.1, mode(0), mode(1)));
    c.add(make_gate(GateKind::SWAP, spin(0), mode(1)));
    const oracle::V v = oracle::random_state(16, rng);
    const PureState out = run_circuit(c, PureState(2, v));
    EXPECT_LT((out.amplitudes() - circuit_unitary(c) * v).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Circuit, ValidateChecksRange) {
    Circuit c{.n_electrons = 1, .ops = {make_gate(GateKind::H, spin(1))}};
    EXPECT_THROW(c.validate(), Error);
}

TEST(Identities, AllSixHold) {
    const IdentityReport r = verify_identities(1e-10);
    ASSERT_EQ(r.checks.size(), 6u);
    for (const auto &c : r.checks) {
        EXPECT_TRUE(c.passed) << c.name << " error " << c.max_error;
    }
    EXPECT_TRUE(r.all_passed());
}

TEST(Identities, IndependentOracleAgrees) {
    using oracle::C;
    const oracle::M x = oracle::pauli_x();
    const oracle::M z = oracle::pauli_z();
    const oracle::M h = (x + z) / std::sqrt(2.0);
    EXPECT_LT(oracle::max_abs(h - C(0, -1) * oracle::rot(z, pi / 4) * oracle::rot(x, pi / 4) * oracle::rot(z, pi / 4)),
              1e-15);
    EXPECT_LT(oracle::max_abs(x - C(0, -1) * oracle::rot(x, pi / 2)), 1e-15);
    const double phi = 0.9;
    oracle::M p = oracle::M::Identity(2, 2);
    p(1, 1) = std::polar(1.0, phi);
    EXPECT_LT(oracle::max_abs(p - std::polar(1.0, phi / 2) * oracle::rot(z, -phi / 2)), 1e-15);
}

TEST(Identities, RejectsNonPositiveTolerance) {
    EXPECT_THROW(verify_identities(0.0), Error);
}
